//! Reflection tables for the exceptional types, in plate order.
//!
//! `plate` is the root in the ambient coordinates used by the reference
//! plates (`nu:` prefixes a sign-bit row), `delta` is the expansion in the
//! simple roots, and `word` is the palindromic reduced expression as a digit
//! string. For [`E8_DISTINCT`] the stored word is the conjugator `w`; the
//! full reflection word is `w` followed by [`THETA_WORD`] followed by the
//! reverse of `w`.

pub(crate) struct RawRow {
    pub plate: &'static str,
    pub delta: &'static [i64],
    pub word: &'static str,
}

/// Word for the shortest reflection conjugated into the rows of
/// [`E8_DISTINCT`].
pub(crate) const THETA_WORD: &str = "16524342561";

pub(crate) static G2_ROWS: &[RawRow] = &[
    RawRow {
        plate: "e1-e2",
        delta: &[1, 0],
        word: "1",
    },
    RawRow {
        plate: "-2e1+e2+e3",
        delta: &[0, 1],
        word: "2",
    },
    RawRow {
        plate: "-e1+e3",
        delta: &[1, 1],
        word: "212",
    },
    RawRow {
        plate: "e1-2e2+e3",
        delta: &[3, 1],
        word: "121",
    },
    RawRow {
        plate: "-e2+e3",
        delta: &[2, 1],
        word: "12121",
    },
    RawRow {
        plate: "-e1-e2+2e3",
        delta: &[3, 2],
        word: "21212",
    },
];

pub(crate) static F4_ROWS: &[RawRow] = &[
    RawRow {
        plate: "e2-e3",
        delta: &[1, 0, 0, 0],
        word: "1",
    },
    RawRow {
        plate: "e3-e4",
        delta: &[0, 1, 0, 0],
        word: "2",
    },
    RawRow {
        plate: "e2-e4",
        delta: &[1, 1, 0, 0],
        word: "121",
    },
    RawRow {
        plate: "e2",
        delta: &[1, 1, 1, 0],
        word: "12321",
    },
    RawRow {
        plate: "e3",
        delta: &[0, 1, 1, 0],
        word: "232",
    },
    RawRow {
        plate: "e4",
        delta: &[0, 0, 1, 0],
        word: "3",
    },
    RawRow {
        plate: "e3+e4",
        delta: &[0, 1, 2, 0],
        word: "323",
    },
    RawRow {
        plate: "e2+e4",
        delta: &[1, 1, 2, 0],
        word: "13231",
    },
    RawRow {
        plate: "e2+e3",
        delta: &[1, 2, 2, 0],
        word: "2132312",
    },
    RawRow {
        plate: "1/2(e1-e2-e3-e4)",
        delta: &[0, 0, 0, 1],
        word: "4",
    },
    RawRow {
        plate: "1/2(e1-e2-e3+e4)",
        delta: &[0, 0, 1, 1],
        word: "434",
    },
    RawRow {
        plate: "1/2(e1-e2+e3-e4)",
        delta: &[0, 1, 1, 1],
        word: "42324",
    },
    RawRow {
        plate: "1/2(e1-e2+e3+e4)",
        delta: &[0, 1, 2, 1],
        word: "3423243",
    },
    RawRow {
        plate: "e1-e2",
        delta: &[0, 1, 2, 2],
        word: "43234",
    },
    RawRow {
        plate: "1/2(e1+e2-e3-e4)",
        delta: &[1, 1, 1, 1],
        word: "1423241",
    },
    RawRow {
        plate: "1/2(e1+e2-e3+e4)",
        delta: &[1, 1, 2, 1],
        word: "134232431",
    },
    RawRow {
        plate: "1/2(e1+e2+e3-e4)",
        delta: &[1, 2, 2, 1],
        word: "21342324312",
    },
    RawRow {
        plate: "1/2(e1+e2+e3+e4)",
        delta: &[1, 2, 3, 1],
        word: "3213423243123",
    },
    RawRow {
        plate: "e1-e3",
        delta: &[1, 1, 2, 2],
        word: "1432341",
    },
    RawRow {
        plate: "e1-e4",
        delta: &[1, 2, 2, 2],
        word: "214323412",
    },
    RawRow {
        plate: "e1+e4",
        delta: &[1, 2, 4, 2],
        word: "32143234123",
    },
    RawRow {
        plate: "e1+e3",
        delta: &[1, 3, 4, 2],
        word: "2321432341232",
    },
    RawRow {
        plate: "e1",
        delta: &[1, 2, 3, 2],
        word: "432134232431234",
    },
    RawRow {
        plate: "e1+e2",
        delta: &[2, 3, 4, 2],
        word: "123214323412321",
    },
];

pub(crate) static E6_ROWS: &[RawRow] = &[
    RawRow {
        plate: "nu:01111",
        delta: &[1, 0, 0, 0, 0, 0],
        word: "1",
    },
    RawRow {
        plate: "nu:10111",
        delta: &[1, 0, 1, 0, 0, 0],
        word: "131",
    },
    RawRow {
        plate: "nu:11011",
        delta: &[1, 0, 1, 1, 0, 0],
        word: "13431",
    },
    RawRow {
        plate: "nu:00011",
        delta: &[1, 1, 1, 1, 0, 0],
        word: "1342431",
    },
    RawRow {
        plate: "-e1+e2",
        delta: &[0, 0, 1, 0, 0, 0],
        word: "3",
    },
    RawRow {
        plate: "-e1+e3",
        delta: &[0, 0, 1, 1, 0, 0],
        word: "343",
    },
    RawRow {
        plate: "-e2+e3",
        delta: &[0, 0, 0, 1, 0, 0],
        word: "4",
    },
    RawRow {
        plate: "e1+e2",
        delta: &[0, 1, 0, 0, 0, 0],
        word: "2",
    },
    RawRow {
        plate: "e1+e3",
        delta: &[0, 1, 0, 1, 0, 0],
        word: "424",
    },
    RawRow {
        plate: "e2+e3",
        delta: &[0, 1, 1, 1, 0, 0],
        word: "34243",
    },
    RawRow {
        plate: "-e3+e4",
        delta: &[0, 0, 0, 0, 1, 0],
        word: "5",
    },
    RawRow {
        plate: "-e2+e4",
        delta: &[0, 0, 0, 1, 1, 0],
        word: "454",
    },
    RawRow {
        plate: "-e1+e4",
        delta: &[0, 0, 1, 1, 1, 0],
        word: "34543",
    },
    RawRow {
        plate: "nu:11101",
        delta: &[1, 0, 1, 1, 1, 0],
        word: "1345431",
    },
    RawRow {
        plate: "nu:00101",
        delta: &[1, 1, 1, 1, 1, 0],
        word: "132454231",
    },
    RawRow {
        plate: "nu:01001",
        delta: &[1, 1, 1, 2, 1, 0],
        word: "41324542314",
    },
    RawRow {
        plate: "nu:10001",
        delta: &[1, 1, 2, 2, 1, 0],
        word: "3413245423143",
    },
    RawRow {
        plate: "e1+e4",
        delta: &[0, 1, 0, 1, 1, 0],
        word: "24542",
    },
    RawRow {
        plate: "e2+e4",
        delta: &[0, 1, 1, 1, 1, 0],
        word: "3245423",
    },
    RawRow {
        plate: "e3+e4",
        delta: &[0, 1, 1, 2, 1, 0],
        word: "432454234",
    },
    RawRow {
        plate: "-e4+e5",
        delta: &[0, 0, 0, 0, 0, 1],
        word: "6",
    },
    RawRow {
        plate: "-e3+e5",
        delta: &[0, 0, 0, 0, 1, 1],
        word: "656",
    },
    RawRow {
        plate: "-e2+e5",
        delta: &[0, 0, 0, 1, 1, 1],
        word: "65456",
    },
    RawRow {
        plate: "-e1+e5",
        delta: &[0, 0, 1, 1, 1, 1],
        word: "6543456",
    },
    RawRow {
        plate: "e1+e5",
        delta: &[0, 1, 0, 1, 1, 1],
        word: "6542456",
    },
    RawRow {
        plate: "e2+e5",
        delta: &[0, 1, 1, 1, 1, 1],
        word: "652434256",
    },
    RawRow {
        plate: "e3+e5",
        delta: &[0, 1, 1, 2, 1, 1],
        word: "46524342564",
    },
    RawRow {
        plate: "e4+e5",
        delta: &[0, 1, 1, 2, 2, 1],
        word: "5465243425645",
    },
    RawRow {
        plate: "nu:11110",
        delta: &[1, 0, 1, 1, 1, 1],
        word: "134565431",
    },
    RawRow {
        plate: "nu:00110",
        delta: &[1, 1, 1, 1, 1, 1],
        word: "16524342561",
    },
    RawRow {
        plate: "nu:01010",
        delta: &[1, 1, 1, 2, 1, 1],
        word: "1465243425641",
    },
    RawRow {
        plate: "nu:01100",
        delta: &[1, 1, 1, 2, 2, 1],
        word: "154652434256451",
    },
    RawRow {
        plate: "nu:10010",
        delta: &[1, 1, 2, 2, 1, 1],
        word: "314652434256413",
    },
    RawRow {
        plate: "nu:10100",
        delta: &[1, 1, 2, 2, 2, 1],
        word: "31546524342564513",
    },
    RawRow {
        plate: "nu:11000",
        delta: &[1, 1, 2, 3, 2, 1],
        word: "4315465243425645134",
    },
    RawRow {
        plate: "nu:00000",
        delta: &[1, 2, 2, 3, 2, 1],
        word: "243154652434256451342",
    },
];

// Rows added by rank 7 (beyond the rank-6 subsystem).
pub(crate) static E7_EXTRA: &[RawRow] = &[
    RawRow {
        plate: "-e5+e6",
        delta: &[0, 0, 0, 0, 0, 0, 1],
        word: "7",
    },
    RawRow {
        plate: "-e4+e6",
        delta: &[0, 0, 0, 0, 0, 1, 1],
        word: "767",
    },
    RawRow {
        plate: "-e3+e6",
        delta: &[0, 0, 0, 0, 1, 1, 1],
        word: "76567",
    },
    RawRow {
        plate: "-e2+e6",
        delta: &[0, 0, 0, 1, 1, 1, 1],
        word: "7654567",
    },
    RawRow {
        plate: "-e1+e6",
        delta: &[0, 0, 1, 1, 1, 1, 1],
        word: "765434567",
    },
    RawRow {
        plate: "e1+e6",
        delta: &[0, 1, 0, 1, 1, 1, 1],
        word: "765424567",
    },
    RawRow {
        plate: "e2+e6",
        delta: &[0, 1, 1, 1, 1, 1, 1],
        word: "76524342567",
    },
    RawRow {
        plate: "e3+e6",
        delta: &[0, 1, 1, 2, 1, 1, 1],
        word: "4765243425674",
    },
    RawRow {
        plate: "e4+e6",
        delta: &[0, 1, 1, 2, 2, 1, 1],
        word: "547652434256745",
    },
    RawRow {
        plate: "e5+e6",
        delta: &[0, 1, 1, 2, 2, 2, 1],
        word: "65476524342567456",
    },
    RawRow {
        plate: "nu:111110",
        delta: &[1, 0, 1, 1, 1, 1, 1],
        word: "13456765431",
    },
    RawRow {
        plate: "nu:001110",
        delta: &[1, 1, 1, 1, 1, 1, 1],
        word: "7165243425617",
    },
    RawRow {
        plate: "nu:010110",
        delta: &[1, 1, 1, 2, 1, 1, 1],
        word: "714652434256417",
    },
    RawRow {
        plate: "nu:011010",
        delta: &[1, 1, 1, 2, 2, 1, 1],
        word: "71546524342564517",
    },
    RawRow {
        plate: "nu:100110",
        delta: &[1, 1, 2, 2, 1, 1, 1],
        word: "73146524342564137",
    },
    RawRow {
        plate: "nu:101010",
        delta: &[1, 1, 2, 2, 2, 1, 1],
        word: "7315465243425645137",
    },
    RawRow {
        plate: "nu:110010",
        delta: &[1, 1, 2, 3, 2, 1, 1],
        word: "743154652434256451347",
    },
    RawRow {
        plate: "nu:000010",
        delta: &[1, 2, 2, 3, 2, 1, 1],
        word: "72431546524342564513427",
    },
    RawRow {
        plate: "nu:011100",
        delta: &[1, 1, 1, 2, 2, 2, 1],
        word: "6715465243425645176",
    },
    RawRow {
        plate: "nu:101100",
        delta: &[1, 1, 2, 2, 2, 2, 1],
        word: "673154652434256451376",
    },
    RawRow {
        plate: "nu:110100",
        delta: &[1, 1, 2, 3, 2, 2, 1],
        word: "67431546524342564513476",
    },
    RawRow {
        plate: "nu:000100",
        delta: &[1, 2, 2, 3, 2, 2, 1],
        word: "6724315465243425645134276",
    },
    RawRow {
        plate: "nu:111000",
        delta: &[1, 1, 2, 3, 3, 2, 1],
        word: "5674315465243425645134765",
    },
    RawRow {
        plate: "nu:001000",
        delta: &[1, 2, 2, 3, 3, 2, 1],
        word: "256743154652434256451347652",
    },
    RawRow {
        plate: "nu:010000",
        delta: &[1, 2, 2, 4, 3, 2, 1],
        word: "42567431546524342564513476524",
    },
    RawRow {
        plate: "nu:100000",
        delta: &[1, 2, 3, 4, 3, 2, 1],
        word: "3425674315465243425645134765243",
    },
    RawRow {
        plate: "-e7+e8",
        delta: &[2, 2, 3, 4, 3, 2, 1],
        word: "134256743154652434256451347652431",
    },
];

// Rank-8 rows arising in classical subsystems.
pub(crate) static E8_CLASSICAL: &[RawRow] = &[
    RawRow {
        plate: "-e6+e7",
        delta: &[0, 0, 0, 0, 0, 0, 0, 1],
        word: "8",
    },
    RawRow {
        plate: "-e5+e7",
        delta: &[0, 0, 0, 0, 0, 0, 1, 1],
        word: "878",
    },
    RawRow {
        plate: "-e4+e7",
        delta: &[0, 0, 0, 0, 0, 1, 1, 1],
        word: "87678",
    },
    RawRow {
        plate: "-e3+e7",
        delta: &[0, 0, 0, 0, 1, 1, 1, 1],
        word: "8765678",
    },
    RawRow {
        plate: "-e2+e7",
        delta: &[0, 0, 0, 1, 1, 1, 1, 1],
        word: "876545678",
    },
    RawRow {
        plate: "-e1+e7",
        delta: &[0, 0, 1, 1, 1, 1, 1, 1],
        word: "87654345678",
    },
    RawRow {
        plate: "e1+e7",
        delta: &[0, 1, 0, 1, 1, 1, 1, 1],
        word: "87654245678",
    },
    RawRow {
        plate: "e2+e7",
        delta: &[0, 1, 1, 1, 1, 1, 1, 1],
        word: "8765243425678",
    },
    RawRow {
        plate: "e3+e7",
        delta: &[0, 1, 1, 2, 1, 1, 1, 1],
        word: "487652434256784",
    },
    RawRow {
        plate: "e4+e7",
        delta: &[0, 1, 1, 2, 2, 1, 1, 1],
        word: "54876524342567845",
    },
    RawRow {
        plate: "e5+e7",
        delta: &[0, 1, 1, 2, 2, 2, 1, 1],
        word: "6548765243425678456",
    },
    RawRow {
        plate: "e6+e7",
        delta: &[0, 1, 1, 2, 2, 2, 2, 1],
        word: "765487652434256784567",
    },
    RawRow {
        plate: "nu:1111110",
        delta: &[1, 0, 1, 1, 1, 1, 1, 1],
        word: "1345678765431",
    },
];

// Rows distinct to rank 8; `word` holds the conjugator only.
pub(crate) static E8_DISTINCT: &[RawRow] = &[
    RawRow {
        plate: "nu:0011110",
        delta: &[1, 1, 1, 1, 1, 1, 1, 1],
        word: "87",
    },
    RawRow {
        plate: "nu:0101110",
        delta: &[1, 1, 1, 2, 1, 1, 1, 1],
        word: "487",
    },
    RawRow {
        plate: "nu:1001110",
        delta: &[1, 1, 2, 2, 1, 1, 1, 1],
        word: "3487",
    },
    RawRow {
        plate: "nu:1010110",
        delta: &[1, 1, 2, 2, 2, 1, 1, 1],
        word: "53487",
    },
    RawRow {
        plate: "nu:1100110",
        delta: &[1, 1, 2, 3, 2, 1, 1, 1],
        word: "453487",
    },
    RawRow {
        plate: "nu:0000110",
        delta: &[1, 2, 2, 3, 2, 1, 1, 1],
        word: "2453487",
    },
    RawRow {
        plate: "nu:0001010",
        delta: &[1, 2, 2, 3, 2, 2, 1, 1],
        word: "62453487",
    },
    RawRow {
        plate: "nu:0110110",
        delta: &[1, 1, 1, 2, 2, 1, 1, 1],
        word: "5487",
    },
    RawRow {
        plate: "nu:0111010",
        delta: &[1, 1, 1, 2, 2, 2, 1, 1],
        word: "65487",
    },
    RawRow {
        plate: "nu:1011010",
        delta: &[1, 1, 2, 2, 2, 2, 1, 1],
        word: "365487",
    },
    RawRow {
        plate: "nu:1101010",
        delta: &[1, 1, 2, 3, 2, 2, 1, 1],
        word: "4365487",
    },
    RawRow {
        plate: "nu:1110010",
        delta: &[1, 1, 2, 3, 3, 2, 1, 1],
        word: "54365487",
    },
    RawRow {
        plate: "nu:0010010",
        delta: &[1, 2, 2, 3, 3, 2, 1, 1],
        word: "254365487",
    },
    RawRow {
        plate: "nu:0100010",
        delta: &[1, 2, 2, 4, 3, 2, 1, 1],
        word: "4254365487",
    },
    RawRow {
        plate: "nu:1000010",
        delta: &[1, 2, 3, 4, 3, 2, 1, 1],
        word: "34254365487",
    },
    RawRow {
        plate: "-e6+e8",
        delta: &[2, 2, 3, 4, 3, 2, 1, 1],
        word: "134254365487",
    },
    RawRow {
        plate: "nu:0111100",
        delta: &[1, 1, 1, 2, 2, 2, 2, 1],
        word: "765487",
    },
    RawRow {
        plate: "nu:1011100",
        delta: &[1, 1, 2, 2, 2, 2, 2, 1],
        word: "3765487",
    },
    RawRow {
        plate: "nu:1101100",
        delta: &[1, 1, 2, 3, 2, 2, 2, 1],
        word: "43765487",
    },
    RawRow {
        plate: "nu:0001100",
        delta: &[1, 2, 2, 3, 2, 2, 2, 1],
        word: "243765487",
    },
    RawRow {
        plate: "nu:0010100",
        delta: &[1, 2, 2, 3, 3, 2, 2, 1],
        word: "5243765487",
    },
    RawRow {
        plate: "nu:0100100",
        delta: &[1, 2, 2, 4, 3, 2, 2, 1],
        word: "45243765487",
    },
    RawRow {
        plate: "nu:1000100",
        delta: &[1, 2, 3, 4, 3, 2, 2, 1],
        word: "345243765487",
    },
    RawRow {
        plate: "-e5+e8",
        delta: &[2, 2, 3, 4, 3, 2, 2, 1],
        word: "1345243765487",
    },
    RawRow {
        plate: "nu:1110100",
        delta: &[1, 1, 2, 3, 3, 2, 2, 1],
        word: "543765487",
    },
    RawRow {
        plate: "nu:1111000",
        delta: &[1, 1, 2, 3, 3, 3, 2, 1],
        word: "6543765487",
    },
    RawRow {
        plate: "nu:0011000",
        delta: &[1, 2, 2, 3, 3, 3, 2, 1],
        word: "26543765487",
    },
    RawRow {
        plate: "nu:0101000",
        delta: &[1, 2, 2, 4, 3, 3, 2, 1],
        word: "426543765487",
    },
    RawRow {
        plate: "nu:1001000",
        delta: &[1, 2, 3, 4, 3, 3, 2, 1],
        word: "3426543765487",
    },
    RawRow {
        plate: "-e4+e8",
        delta: &[2, 2, 3, 4, 3, 3, 2, 1],
        word: "13426543765487",
    },
    RawRow {
        plate: "-e3+e8",
        delta: &[2, 2, 3, 4, 4, 3, 2, 1],
        word: "513426543765487",
    },
    RawRow {
        plate: "-e2+e8",
        delta: &[2, 2, 3, 5, 4, 3, 2, 1],
        word: "4513426543765487",
    },
    RawRow {
        plate: "-e1+e8",
        delta: &[2, 2, 4, 5, 4, 3, 2, 1],
        word: "34513426543765487",
    },
    RawRow {
        plate: "nu:0110000",
        delta: &[1, 2, 2, 4, 4, 3, 2, 1],
        word: "5426543765487",
    },
    RawRow {
        plate: "nu:1010000",
        delta: &[1, 2, 3, 4, 4, 3, 2, 1],
        word: "35426543765487",
    },
    RawRow {
        plate: "nu:1100000",
        delta: &[1, 2, 3, 5, 4, 3, 2, 1],
        word: "435426543765487",
    },
    RawRow {
        plate: "nu:0000000",
        delta: &[1, 3, 3, 5, 4, 3, 2, 1],
        word: "2435426543765487",
    },
    RawRow {
        plate: "e1+e8",
        delta: &[2, 3, 3, 5, 4, 3, 2, 1],
        word: "12435426543765487",
    },
    RawRow {
        plate: "e2+e8",
        delta: &[2, 3, 4, 5, 4, 3, 2, 1],
        word: "312435426543765487",
    },
    RawRow {
        plate: "e3+e8",
        delta: &[2, 3, 4, 6, 4, 3, 2, 1],
        word: "4312435426543765487",
    },
    RawRow {
        plate: "e4+e8",
        delta: &[2, 3, 4, 6, 5, 3, 2, 1],
        word: "54312435426543765487",
    },
    RawRow {
        plate: "e5+e8",
        delta: &[2, 3, 4, 6, 5, 4, 2, 1],
        word: "654312435426543765487",
    },
    RawRow {
        plate: "e6+e8",
        delta: &[2, 3, 4, 6, 5, 4, 3, 1],
        word: "7654312435426543765487",
    },
    RawRow {
        plate: "e7+e8",
        delta: &[2, 3, 4, 6, 5, 4, 3, 2],
        word: "87654312435426543765487",
    },
];
