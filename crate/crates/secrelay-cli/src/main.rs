use clap::Parser;
use secrelay_cli::args::{Cli, Command};
use secrelay_cli::commands;
use secrelay_cli::config::FileConfig;
use secrelay_cli::CliResult;

fn dispatch(cli: &Cli, file: &FileConfig) -> CliResult<()> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match &cli.command {
        Command::FournodeEval(args) => commands::eval::run(args, file, &mut out),
        Command::Fig2(args) => {
            let params = commands::fig2::resolve(args, file)?;
            commands::fig2::run(&params, &mut out)
        }
        Command::Fig3(args) => {
            let params = commands::fig3::resolve(args, file)?;
            commands::fig3::run(&params, &mut out)
        }
        Command::Fig5(args) => {
            let params = commands::fig5::resolve(args, file)?;
            commands::fig5::run(&params, &mut out)
        }
        Command::Fig6(args) => {
            let params = commands::fig6::resolve(args, file)?;
            commands::fig6::run(&params, &mut out)
        }
        Command::Validate(args) => {
            let params = commands::validate::resolve(args, file)?;
            commands::validate::run(&params, &mut out)
        }
        Command::Replay(args) => commands::replay::run(args, &mut out),
    }
}

fn main() {
    let cli = Cli::parse();

    let file = match &cli.config {
        Some(path) => match FileConfig::load(path) {
            Ok(f) => f,
            Err(e) => {
                eprintln!("error: {e}");
                std::process::exit(2);
            }
        },
        None => FileConfig::default(),
    };

    let threads = cli
        .threads
        .or_else(|| file.get_usize("threads").ok().flatten());
    if let Some(n) = threads {
        // Worker count never changes results; it only bounds parallelism.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }

    match dispatch(&cli, &file) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
