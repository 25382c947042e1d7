//! Run a session file, or a built-in one, and print the report.

use aggraded::session::{run_text, Overrides};

const DEFAULT: &str = "\
vars x y
flavor local
ideal I : y^2 - x^3
free F : rank 1
submodule N in F : [x]
module M = F / N
analyze M : tangent_cone, betti, purity, equigen
";

fn main() -> aggraded::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(&path).map_err(|e| aggraded::Error::Precondition(format!("{path}: {e}")))?,
        None => DEFAULT.to_string(),
    };
    let report = run_text(&text, &Overrides::default())?;
    print!("{}", report.render());
    println!("exit status {}", report.exit_code());
    Ok(())
}
