// Characters of irreducible modules (Freudenthal, Weyl dimension, duals)
// and Euler characteristics of line bundles on G/B via Borel–Weil–Bott.

use qkostant::{
    bwb_euler, dual_highest_weight, freudenthal, weyl_dimension, Result, RootSystem, SignedWeight, Weight,
    WeightCharacter,
};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let b2 = RootSystem::from_type("B2".parse()?);
    let lambda = Weight::new(vec![1, 1]);
    let ch = freudenthal(&b2, &lambda)?;
    out += &format!(
        "B2 V{lambda}: {} weights, dim {} (Weyl: {})\n",
        ch.len(),
        ch.dimension(),
        weyl_dimension(&b2, &lambda)?
    );
    for (mu, m) in ch.dominant() {
        out += &format!("  {mu} × {m}\n");
    }
    let json = ch.to_json();
    assert_eq!(WeightCharacter::from_json(&json)?, ch);

    // in type A the dual reverses the coordinates
    let a3 = RootSystem::from_type("A3".parse()?);
    let v = Weight::new(vec![2, 1, 0]);
    out += &format!("A3: V{v}^* = V{}\n", dual_highest_weight(&a3, &v)?);

    let a1 = RootSystem::from_type("A1".parse()?);
    for n in -4..=3 {
        let tau = Weight::new(vec![n]);
        let chi = match bwb_euler(&a1, &tau)? {
            SignedWeight::Zero => "0".to_string(),
            SignedWeight::Term { sign, highest_weight } => format!("{sign:+} ch V{highest_weight}^*"),
        };
        out += &format!("A1, τ = {tau}: χ(G/B, L_-τ) = {chi}\n");
    }
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
