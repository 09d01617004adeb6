use clap::Parser;

fn main() {
    // clap exits with status 2 on usage errors
    let cli = bcmf::Cli::parse();
    if let Err(e) = bcmf::run(&cli) {
        // a downstream reader closing the pipe early (e.g. `bcmf ... | head`)
        // is not a failure of ours
        if let Some(io) = e.downcast_ref::<std::io::Error>() {
            if io.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
        }
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
