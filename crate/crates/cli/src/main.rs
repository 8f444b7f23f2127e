use std::io::Write;

fn main() {
    let resp = chebcurves_cli::run(std::env::args_os());
    let _ = std::io::stdout().lock().write_all(resp.stdout.as_bytes());
    let _ = std::io::stderr().lock().write_all(resp.stderr.as_bytes());
    std::process::exit(resp.code);
}
