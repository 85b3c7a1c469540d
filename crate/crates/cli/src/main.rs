use std::io;
use std::process::ExitCode;
use std::thread;

// Printing and the term operations recurse over the term, so very deep
// inputs get a large stack.
const STACK_SIZE: usize = 1 << 30;

fn main() -> ExitCode {
    let code = thread::Builder::new()
        .stack_size(STACK_SIZE)
        .spawn(|| {
            let stdout = io::stdout();
            let stderr = io::stderr();
            lamb_cli::run(
                std::env::args_os(),
                &mut io::stdin().lock(),
                &mut stdout.lock(),
                &mut stderr.lock(),
            )
        })
        .expect("failed to start the worker thread")
        .join()
        .unwrap_or(101);
    ExitCode::from(code as u8)
}
