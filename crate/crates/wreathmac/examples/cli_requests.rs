//! Drive the command-line layer in-process.

use wreathmac::cli::{main_with_args, Request};

fn main() {
    let args = ["compute", "--r", "3", "--w", "s2 s1 t[1,-1,0]", "--mu", "[[1],[],[]]"];
    let req = Request::parse_args(args).unwrap();
    assert_eq!(Request::parse_args(req.render()).unwrap(), req);
    for argv in [&args[..], &["compute", "--r", "1", "--w", "", "--mu", "[[2]]"], &["compute", "--r", "3", "--w", "s7", "--mu", "[[1],[],[]]"]] {
        let out = main_with_args(argv.iter().copied());
        println!("exit {}: {}", out.code, out.json);
    }
}
