fn main() {
    if let Ok(v) = std::env::var("DELTAMAT_GUARD_LIMIT") {
        match v.parse() {
            Ok(limit) => deltamat::ground::set_guard_limit(limit),
            Err(_) => {
                eprintln!("error: DELTAMAT_GUARD_LIMIT must be an integer, found `{v}`");
                std::process::exit(2);
            }
        }
    }
    let argv: Vec<String> = std::env::args().collect();
    let (code, text) = deltamat_cli::run(&argv);
    if !text.is_empty() {
        if code == 0 || code == 1 {
            println!("{}", text.trim_end());
        } else {
            eprintln!("{}", text.trim_end());
        }
    }
    std::process::exit(code);
}
