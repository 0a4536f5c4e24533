//! Drive the command-line interface in-process and inspect its outcome.

use zpk_classes::cli::run;

fn main() {
    for args in [
        vec!["zpk-classes", "dickson", "--p", "3", "--k", "2"],
        vec!["zpk-classes", "verify", "--p", "5", "--k", "2"],
        vec!["zpk-classes", "check", "--p", "3", "--m", "1", "--n", "7,7", "--format", "json"],
    ] {
        let out = run(&args);
        println!("$ {}  (exit {})", args.join(" "), out.code);
        print!("{}{}", out.stdout, out.stderr);
    }
}
