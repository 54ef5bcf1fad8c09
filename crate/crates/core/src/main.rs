use std::io::Write;

fn main() {
    let out = spectral_torsion::cli::run(std::env::args_os());
    let text = out.output;
    if out.code == 1 && text.starts_with("error") {
        eprint!("{text}");
    } else {
        let _ = std::io::stdout().write_all(text.as_bytes());
    }
    std::process::exit(out.code);
}
