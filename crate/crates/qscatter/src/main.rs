use clap::Parser;

use qscatter::cli::{run, Cli};

fn main() {
    if let Ok(threads) = std::env::var("QSCATTER_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            if n > 0 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
    let cli = Cli::parse();
    std::process::exit(run(&cli));
}
