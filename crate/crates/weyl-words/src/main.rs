use std::process::ExitCode;

fn main() -> ExitCode {
    // Die quietly on SIGPIPE so `weyl-words table E8 | head` behaves like
    // any other text filter instead of panicking mid-write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    weyl_words::cli::run()
}
