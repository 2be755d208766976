use std::process::ExitCode;

use qid_cli::{parse_args, run_suite, Format};

fn main() -> ExitCode {
    let cfg = match parse_args(std::env::args_os()) {
        Ok(cfg) => cfg,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let report = run_suite(&cfg);
    match cfg.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    ExitCode::from(report.exit_code() as u8)
}
