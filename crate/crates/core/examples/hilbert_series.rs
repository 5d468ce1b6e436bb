// Graded Euler character and Hilbert series of nearly holomorphic sections,
// computed along both routes and checked against each other.

use qkostant::{HilbertEngine, HilbertReport, ParabolicSubset, PathCheck, Result, RootSystem, Weight, DEFAULT_WEYL_CAP};

pub fn run_example() -> Result<String> {
    let mut out = String::new();

    let a1 = RootSystem::from_type("A1".parse()?);
    let engine = HilbertEngine::new(&a1, &ParabolicSubset::borel(&a1), DEFAULT_WEYL_CAP)?;
    let report = engine.hilbert_series(&Weight::zero(1), 5, PathCheck::Always)?;
    out += &report.to_text();
    out += "\n";

    // Grassmannian Gr(2,4): the parabolic of A3 that keeps α1 and α3
    let a3 = RootSystem::from_type("A3".parse()?);
    let p = ParabolicSubset::parse(&a3, "1,3")?;
    let engine = HilbertEngine::new(&a3, &p, DEFAULT_WEYL_CAP)?;
    let mu = Weight::new(vec![0, 1, 0]);
    let direct = engine.graded_euler_direct(&mu, 2)?;
    let lusztig = engine.graded_euler_lusztig(&mu, 2)?;
    assert_eq!(direct, lusztig);
    let report = engine.hilbert_series(&mu, 2, PathCheck::Sampled { stride: 2 })?;
    out += &report.to_text();
    out += "\n";
    out += &report.to_latex();
    out += "\n";

    let json = report.to_json();
    assert_eq!(HilbertReport::from_json(&json)?.to_json(), json);
    out += &json;
    out += "\n";
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
