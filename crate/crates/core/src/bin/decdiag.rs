use std::io;

fn main() {
    // Completion recurses once per nested peak; give it room.
    let child = std::thread::Builder::new()
        .stack_size(256 << 20)
        .spawn(|| {
            let args: Vec<_> = std::env::args_os().collect();
            decdiag::cli::run(args, &mut io::stdout().lock(), &mut io::stderr().lock())
        })
        .expect("spawn main thread");
    let code = child.join().unwrap_or(decdiag::cli::EXIT_INTERNAL);
    std::process::exit(code);
}
