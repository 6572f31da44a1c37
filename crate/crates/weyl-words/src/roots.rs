//! Root systems in simple-root coordinates, with exact Euclidean embeddings.
//!
//! A [`Root`] is an integer coefficient vector over the simple basis; the
//! full system is generated by closing the simple roots under the simple
//! reflections. All positives carry nonnegative coefficients, and the
//! canonical order is by height and then lexicographically, so consumers can
//! rely on a stable enumeration.
//!
//! The invariant inner product lives on coefficient vectors via the
//! symmetrized Cartan matrix. Each type additionally gets the textbook
//! coordinate embedding (`A_n` in `R^{n+1}`, `B`/`C`/`D_n` in `R^n`, `G_2`
//! in the sum-zero plane of `R^3`, `F_4` in `R^4`, and the `E` family in
//! ambient `R^8`, where the rank 6 and 7 systems occupy the subspaces
//! `x6 = x7 = -x8` and `x7 = -x8`). The two metrics agree up to one global
//! positive rational factor per type.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_rational::Rational64;
use num_traits::Zero;

use crate::cartan::{datum, CartanDatum, Family, TypeLabel};
use crate::{Error, Result};

/// Integer coefficient vector over the simple roots `alpha_1..alpha_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i64>);

impl Root {
    /// Sum of the simple-root coefficients.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    /// Parses `"1,2,2,1"`.
    pub fn parse(s: &str) -> Result<Root> {
        let coeffs: std::result::Result<Vec<i64>, _> =
            s.split(',').map(|t| t.trim().parse()).collect();
        coeffs
            .map(Root)
            .map_err(|_| Error::ParseRoot(s.to_string()))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// Integer coefficient vector over the simple coroots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coroot(pub Vec<i64>);

impl Coroot {
    /// Sum of the simple-coroot coefficients, the dual height.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for Coroot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// Exact rational coordinates in the per-type ambient space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EuclideanVector(pub Vec<Rational64>);

impl EuclideanVector {
    pub fn dot(&self, other: &EuclideanVector) -> Rational64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a * b)
            .fold(Rational64::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for EuclideanVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", s.join(", "))
    }
}

/// A finite crystallographic root system with its positive roots enumerated.
#[derive(Debug, Clone)]
pub struct RootSystem {
    datum: CartanDatum,
    positives: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    two_rho: Vec<i64>,
    /// Ambient coordinates of the simple roots, one column per generator.
    embedding: Vec<Vec<Rational64>>,
}

impl RootSystem {
    /// Generates the full system by closing the simple roots under all
    /// simple reflections, then keeps the positive half.
    pub fn build(label: TypeLabel) -> RootSystem {
        let datum = datum(label);
        let n = label.rank();

        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: Vec<Vec<i64>> = Vec::new();
        for i in 0..n {
            let mut alpha = vec![0i64; n];
            alpha[i] = 1;
            seen.insert(alpha.clone());
            queue.push(alpha);
        }
        while let Some(beta) = queue.pop() {
            for i in 0..n {
                // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i
                let pairing: i64 = (0..n).map(|j| beta[j] * datum.cartan(j + 1, i + 1)).sum();
                let mut image = beta.clone();
                image[i] -= pairing;
                if seen.insert(image.clone()) {
                    queue.push(image);
                }
            }
        }

        let mut positives: Vec<Root> = seen
            .into_iter()
            .filter(|v| v.iter().all(|&c| c >= 0))
            .map(Root)
            .collect();
        positives.sort_by_key(|r| (r.height(), r.0.clone()));

        let index = positives
            .iter()
            .enumerate()
            .map(|(k, r)| (r.0.clone(), k))
            .collect();
        let mut two_rho = vec![0i64; n];
        for r in &positives {
            for (acc, c) in two_rho.iter_mut().zip(&r.0) {
                *acc += c;
            }
        }

        RootSystem {
            positives,
            index,
            two_rho,
            embedding: embedding(label),
            datum,
        }
    }

    pub fn label(&self) -> TypeLabel {
        self.datum.label()
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positives
    }

    /// Position of a positive root in the canonical enumeration.
    pub fn index_of(&self, root: &Root) -> Option<usize> {
        self.index.get(&root.0).copied()
    }

    pub fn is_positive_root(&self, root: &Root) -> bool {
        self.index.contains_key(&root.0)
    }

    /// Membership in the full system, either sign.
    pub fn is_root(&self, root: &Root) -> bool {
        if self.is_positive_root(root) {
            return true;
        }
        let neg = Root(root.0.iter().map(|c| -c).collect());
        self.is_positive_root(&neg)
    }

    /// Sum of all positive roots; halves to the Weyl vector.
    pub fn two_rho(&self) -> &[i64] {
        &self.two_rho
    }

    /// The invariant inner product on coefficient vectors, normalized so
    /// `2 inner(a_j, a_i) / inner(a_i, a_i) = c[j][i]`. Total: the inputs
    /// need not be roots.
    pub fn inner(&self, a: &Root, b: &Root) -> Rational64 {
        let n = self.rank();
        let mut acc = Rational64::zero();
        for i in 0..n {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                if b.0[j] == 0 {
                    continue;
                }
                // (alpha_i, alpha_j) = sym[j] * c[i][j]
                let gram = self.datum.sym(j + 1)
                    * Rational64::from_integer(self.datum.cartan(i + 1, j + 1));
                acc += Rational64::from_integer(a.0[i] * b.0[j]) * gram;
            }
        }
        acc
    }

    fn not_a_root(&self, r: &Root) -> Error {
        Error::NotARoot {
            label: self.label(),
            coeffs: r.to_string(),
        }
    }

    /// The coroot `2 alpha / (alpha, alpha)` in simple-coroot coordinates:
    /// coefficient `a_i` maps to `a_i (alpha_i, alpha_i) / (alpha, alpha)`.
    pub fn coroot(&self, root: &Root) -> Result<Coroot> {
        if !self.is_root(root) {
            return Err(self.not_a_root(root));
        }
        let half_norm = self.inner(root, root) / 2;
        let coeffs = root
            .0
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                let c = Rational64::from_integer(a) * self.datum.sym(i + 1) / half_norm;
                debug_assert!(c.is_integer());
                c.to_integer()
            })
            .collect();
        Ok(Coroot(coeffs))
    }

    /// Ambient coordinates of an arbitrary coefficient vector.
    pub fn euclidean(&self, root: &Root) -> Result<EuclideanVector> {
        if !self.is_root(root) {
            return Err(self.not_a_root(root));
        }
        Ok(self.euclidean_unchecked(root))
    }

    pub(crate) fn euclidean_unchecked(&self, root: &Root) -> EuclideanVector {
        let dim = self.embedding[0].len();
        let mut v = vec![Rational64::zero(); dim];
        for (i, &c) in root.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (acc, x) in v.iter_mut().zip(&self.embedding[i]) {
                *acc += Rational64::from_integer(c) * x;
            }
        }
        EuclideanVector(v)
    }

    /// The unique root of maximal height.
    pub fn highest_root(&self) -> Root {
        self.positives.last().expect("nonempty system").clone()
    }
}

/// Ambient simple-root coordinates, one inner Vec per generator.
fn embedding(label: TypeLabel) -> Vec<Vec<Rational64>> {
    let n = label.rank();
    let int = Rational64::from_integer;
    let basis = |dim: usize, i: usize, c: i64| {
        let mut v = vec![Rational64::zero(); dim];
        v[i] = int(c);
        v
    };
    let chain = |dim: usize, i: usize| {
        // e_{i+1} - e_{i+2} in 0-based position i
        let mut v = basis(dim, i, 1);
        v[i + 1] = int(-1);
        v
    };
    match label.family() {
        Family::A => (0..n).map(|i| chain(n + 1, i)).collect(),
        Family::B => {
            let mut cols: Vec<_> = (0..n - 1).map(|i| chain(n, i)).collect();
            cols.push(basis(n, n - 1, 1));
            cols
        }
        Family::C => {
            let mut cols: Vec<_> = (0..n - 1).map(|i| chain(n, i)).collect();
            cols.push(basis(n, n - 1, 2));
            cols
        }
        Family::D => {
            let mut cols: Vec<_> = (0..n - 1).map(|i| chain(n, i)).collect();
            let mut last = basis(n, n - 2, 1);
            last[n - 1] = int(1);
            cols.push(last);
            cols
        }
        Family::G => vec![vec![int(1), int(-1), int(0)], vec![int(-2), int(1), int(1)]],
        Family::F => vec![
            vec![int(0), int(1), int(-1), int(0)],
            vec![int(0), int(0), int(1), int(-1)],
            vec![int(0), int(0), int(0), int(1)],
            vec![
                Rational64::new(1, 2),
                Rational64::new(-1, 2),
                Rational64::new(-1, 2),
                Rational64::new(-1, 2),
            ],
        ],
        Family::E => {
            let half = |signs: [i64; 8]| {
                signs
                    .iter()
                    .map(|&s| Rational64::new(s, 2))
                    .collect::<Vec<_>>()
            };
            let mut cols = vec![
                half([1, -1, -1, -1, -1, -1, -1, 1]),
                {
                    let mut v = basis(8, 0, 1);
                    v[1] = int(1);
                    v
                },
                {
                    let mut v = basis(8, 0, -1);
                    v[1] = int(1);
                    v
                },
            ];
            for i in 1..=5 {
                let mut v = basis(8, i, -1);
                v[i + 1] = int(1);
                cols.push(v);
            }
            cols.truncate(n);
            cols
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Family;

    fn sys(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap())
    }

    fn all_labels() -> Vec<TypeLabel> {
        let mut labels = Vec::new();
        for n in 1..=8 {
            labels.push(TypeLabel::new(Family::A, n).unwrap());
        }
        for n in 2..=8 {
            labels.push(TypeLabel::new(Family::B, n).unwrap());
            labels.push(TypeLabel::new(Family::C, n).unwrap());
        }
        for n in 4..=8 {
            labels.push(TypeLabel::new(Family::D, n).unwrap());
        }
        for n in 6..=8 {
            labels.push(TypeLabel::new(Family::E, n).unwrap());
        }
        labels.push("F4".parse().unwrap());
        labels.push("G2".parse().unwrap());
        labels
    }

    fn expected_count(label: TypeLabel) -> usize {
        let n = label.rank();
        match label.family() {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * n - n,
            Family::G => 6,
            Family::F => 24,
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
        }
    }

    #[test]
    fn positive_root_counts() {
        for label in all_labels() {
            assert_eq!(
                RootSystem::build(label).positive_roots().len(),
                expected_count(label),
                "{label}"
            );
        }
    }

    #[test]
    fn g2_positive_roots_exactly() {
        // The corrected list: alpha_2 is a positive root.
        let got: BTreeSet<Vec<i64>> = sys("G2")
            .positive_roots()
            .iter()
            .map(|r| r.0.clone())
            .collect();
        let want: BTreeSet<Vec<i64>> = [
            vec![1, 0],
            vec![0, 1],
            vec![1, 1],
            vec![2, 1],
            vec![3, 1],
            vec![3, 2],
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn canonical_order_is_by_height_then_lex() {
        for label in all_labels() {
            let s = RootSystem::build(label);
            let mut sorted = s.positive_roots().to_vec();
            sorted.sort_by_key(|r| (r.height(), r.0.clone()));
            assert_eq!(s.positive_roots(), &sorted[..], "{label}");
            for w in s.positive_roots().windows(2) {
                assert_ne!(w[0], w[1]);
            }
        }
    }

    #[test]
    fn closure_under_simple_reflections() {
        for label in ["A3", "C4", "D5", "F4", "G2", "E6"] {
            let s = sys(label);
            let n = s.rank();
            for r in s.positive_roots() {
                for i in 1..=n {
                    let pairing: i64 = (0..n).map(|j| r.0[j] * s.datum().cartan(j + 1, i)).sum();
                    let mut image = r.0.clone();
                    image[i - 1] -= pairing;
                    assert!(s.is_root(&Root(image)), "{label} s_{i} of {r}");
                }
            }
        }
    }

    #[test]
    fn inner_matches_cartan_normalization() {
        for label in all_labels() {
            let s = RootSystem::build(label);
            let n = s.rank();
            for i in 0..n {
                for j in 0..n {
                    let mut a = vec![0i64; n];
                    let mut b = vec![0i64; n];
                    a[j] = 1;
                    b[i] = 1;
                    let (a, b) = (Root(a), Root(b));
                    let lhs = Rational64::from_integer(2) * s.inner(&a, &b) / s.inner(&b, &b);
                    assert_eq!(
                        lhs,
                        Rational64::from_integer(s.datum().cartan(j + 1, i + 1)),
                        "{label} ({i},{j})"
                    );
                }
            }
        }
    }

    #[test]
    fn c4_long_short_products() {
        let s = sys("C4");
        let two_e1 = Root(vec![2, 2, 2, 1]);
        let a1 = Root(vec![1, 0, 0, 0]);
        assert!(s.is_positive_root(&two_e1));
        let ratio = Rational64::from_integer(2) * s.inner(&two_e1, &a1) / s.inner(&two_e1, &two_e1);
        assert_eq!(ratio, Rational64::from_integer(1));
    }

    #[test]
    fn norms_positive_and_simply_laced_equal() {
        for label in all_labels() {
            let s = RootSystem::build(label);
            let norms: BTreeSet<Rational64> =
                s.positive_roots().iter().map(|r| s.inner(r, r)).collect();
            assert!(norms.iter().all(|q| *q > Rational64::zero()), "{label}");
            if label.is_simply_laced() {
                assert_eq!(
                    norms,
                    [Rational64::from_integer(2)].into_iter().collect(),
                    "{label}"
                );
            } else {
                assert_eq!(norms.len(), 2, "{label}");
                assert_eq!(*norms.iter().max().unwrap(), Rational64::from_integer(2));
            }
        }
    }

    #[test]
    fn coroot_basics() {
        // Simply laced: coroot coefficients equal root coefficients.
        let e6 = sys("E6");
        for r in e6.positive_roots() {
            assert_eq!(e6.coroot(r).unwrap().0, r.0);
        }
        // B_n: (e_i)^vee doubles every chain coefficient.
        let b4 = sys("B4");
        let e2 = Root(vec![0, 1, 1, 1]);
        assert_eq!(b4.coroot(&e2).unwrap().0, vec![0, 2, 2, 1]);
        // Simple coroots are unit vectors in every type.
        for label in ["C4", "F4", "G2", "B3"] {
            let s = sys(label);
            for i in 0..s.rank() {
                let mut v = vec![0i64; s.rank()];
                v[i] = 1;
                let mut unit = vec![0i64; s.rank()];
                unit[i] = 1;
                assert_eq!(s.coroot(&Root(v)).unwrap().0, unit);
            }
        }
        let bad = Root(vec![5, 0, 0, 0]);
        assert!(matches!(
            sys("C4").coroot(&bad),
            Err(Error::NotARoot { .. })
        ));
    }

    #[test]
    fn coroots_are_integral_everywhere() {
        for label in all_labels() {
            let s = RootSystem::build(label);
            for r in s.positive_roots() {
                let co = s.coroot(r).unwrap();
                // Pairing with every root stays integral: 2(b,a)/(a,a) in Z.
                for b in s.positive_roots() {
                    let q = Rational64::from_integer(2) * s.inner(b, r) / s.inner(r, r);
                    assert!(q.is_integer(), "{label} <{b},{r}^vee> = {q}");
                }
                assert!(co.height() >= 1);
            }
        }
    }

    #[test]
    fn dual_height_matches_weyl_vector_pairing() {
        // ht(alpha^vee) = <alpha^vee, rho> = inner(alpha, two_rho) / inner(alpha, alpha)
        for label in all_labels() {
            let s = RootSystem::build(label);
            let two_rho = Root(s.two_rho().to_vec());
            for r in s.positive_roots() {
                let pairing = s.inner(r, &two_rho) / s.inner(r, r);
                assert!(pairing.is_integer());
                assert_eq!(
                    pairing.to_integer(),
                    s.coroot(r).unwrap().height(),
                    "{label} {r}"
                );
            }
        }
    }

    #[test]
    fn d_chain_dual_heights() {
        // In D_n, (e_i + e_n)^vee has height n - i.
        let s = sys("D5");
        let e2_plus_e5 = Root(vec![0, 1, 1, 0, 1]);
        assert!(s.is_positive_root(&e2_plus_e5));
        assert_eq!(s.coroot(&e2_plus_e5).unwrap().height(), 3);
    }

    #[test]
    fn euclidean_embeddings() {
        // A_n simple roots are consecutive differences.
        let a3 = sys("A3");
        let int = Rational64::from_integer;
        assert_eq!(
            a3.euclidean(&Root(vec![1, 0, 0])).unwrap().0,
            vec![int(1), int(-1), int(0), int(0)]
        );
        // F4: a1 + 2 a2 + 2 a3 lands on e2 + e3.
        let f4 = sys("F4");
        assert_eq!(
            f4.euclidean(&Root(vec![1, 2, 2, 0])).unwrap().0,
            vec![int(0), int(1), int(1), int(0)]
        );
        // E8 highest root lands on e7 + e8.
        let e8 = sys("E8");
        assert_eq!(
            e8.euclidean(&e8.highest_root()).unwrap().0,
            vec![
                int(0),
                int(0),
                int(0),
                int(0),
                int(0),
                int(0),
                int(1),
                int(1)
            ]
        );
    }

    #[test]
    fn euclidean_subspace_constraints() {
        let g2 = sys("G2");
        for r in g2.positive_roots() {
            let v = g2.euclidean(r).unwrap().0;
            assert_eq!(v[0] + v[1] + v[2], Rational64::zero());
        }
        let e6 = sys("E6");
        for r in e6.positive_roots() {
            let v = e6.euclidean(r).unwrap().0;
            assert_eq!(v[5], v[6]);
            assert_eq!(v[6], -v[7]);
        }
        let e7 = sys("E7");
        for r in e7.positive_roots() {
            let v = e7.euclidean(r).unwrap().0;
            assert_eq!(v[6], -v[7]);
        }
    }

    #[test]
    fn euclidean_is_injective_and_metric_compatible() {
        // One global positive rational scale per type relates the invariant
        // form to the ambient dot product.
        for label in all_labels() {
            let s = RootSystem::build(label);
            let mut images = BTreeSet::new();
            let mut scale: Option<Rational64> = None;
            for r in s.positive_roots() {
                let v = s.euclidean(r).unwrap();
                assert!(images.insert(format!("{v}")), "{label} {r}");
                let q = v.dot(&v) / s.inner(r, r);
                match scale {
                    None => scale = Some(q),
                    Some(prev) => assert_eq!(prev, q, "{label} {r}"),
                }
            }
            assert!(scale.unwrap() > Rational64::zero());
        }
    }

    #[test]
    fn highest_roots() {
        assert_eq!(sys("G2").highest_root().0, vec![3, 2]);
        assert_eq!(sys("E6").highest_root().0, vec![1, 2, 2, 3, 2, 1]);
        assert_eq!(sys("E8").highest_root().0, vec![2, 3, 4, 6, 5, 4, 3, 2]);
        assert_eq!(sys("C3").highest_root().0, vec![2, 2, 1]);
        // Strictly maximal height: no other root ties it.
        for label in all_labels() {
            let s = RootSystem::build(label);
            let top = s.highest_root().height();
            let ties = s
                .positive_roots()
                .iter()
                .filter(|r| r.height() == top)
                .count();
            assert_eq!(ties, 1, "{label}");
        }
    }

    #[test]
    fn root_parse_and_display_round_trip() {
        let r = Root(vec![2, 3, 4, 6, 5, 4, 3, 2]);
        assert_eq!(Root::parse(&r.to_string()).unwrap(), r);
        assert!(Root::parse("1,x,3").is_err());
        assert!(Root::parse("").is_err());
    }
}
