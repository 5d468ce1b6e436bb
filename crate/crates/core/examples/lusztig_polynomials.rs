// Lusztig's q-analog of weight multiplicity. With Π = ∅ these are the
// Kostka–Foulkes polynomials; at q = 1 they recover the ordinary weight
// multiplicities, and m_θ^0 lists the exponents of the Lie algebra.

use qkostant::{freudenthal, LusztigEngine, ParabolicSubset, Result, RootSystem, Weight, DEFAULT_WEYL_CAP};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    for name in ["A2", "B3", "G2"] {
        let rs = RootSystem::from_type(name.parse()?);
        let engine = LusztigEngine::new(&rs, &ParabolicSubset::borel(&rs), DEFAULT_WEYL_CAP)?;
        let theta = rs.root_to_weight(rs.highest_root())?;
        let zero = Weight::zero(rs.rank());
        out += &format!("{name}: m_θ^0(q) = {}\n", engine.poly(&theta, &zero)?);
    }

    let a3 = RootSystem::from_type("A3".parse()?);
    let engine = LusztigEngine::new(&a3, &ParabolicSubset::borel(&a3), DEFAULT_WEYL_CAP)?;
    let lambda = Weight::new(vec![2, 0, 2]);
    let ch = freudenthal(&a3, &lambda)?;
    out += &format!("A3, λ = {lambda}:\n");
    for (mu, mult) in ch.dominant() {
        let m = engine.poly(&lambda, mu)?;
        assert_eq!(m.eval(1)?, mult);
        out += &format!("  μ = {mu}: {m}   (multiplicity {mult})\n");
    }

    let p = ParabolicSubset::parse(&a3, "2")?;
    let parabolic = LusztigEngine::new(&a3, &p, DEFAULT_WEYL_CAP)?;
    out += &format!("Π={p}: m_λ^0 = {}\n", parabolic.poly(&lambda, &Weight::zero(3))?);
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
