//! Loads a bundled TOML model spec and prints its transfer table.

fn main() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/specs/z2_universal.toml");
    let text = std::fs::read_to_string(path).expect("bundled spec");
    let spec = efgc::cli::parse_spec(&text).expect("valid spec");
    println!("digest {}", spec.digest);
    std::process::exit(efgc::cli::run(["efgc", "--out", "pretty", "transfer", path]));
}
