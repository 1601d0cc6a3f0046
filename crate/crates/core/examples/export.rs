//! Drives the command line in-process: a verify run as JSON and two exports.

fn main() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    for args in [
        &["mirror-hg", "verify", "--suite", "periodicity", "--n-range", "2..4", "--x-order", "8"][..],
        &["mirror-hg", "compute", "phi", "--n", "5", "--smax", "2", "--format", "json"],
        &["mirror-hg", "compute", "ek", "--kmax", "3", "--format", "csv"],
    ] {
        let code = mirror_hg::cli::run(args, &mut out, &mut err);
        println!("$ {} -> exit {code}", args[1..].join(" "));
        print!("{}", String::from_utf8_lossy(&out));
        out.clear();
    }
}
