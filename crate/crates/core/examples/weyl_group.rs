// Enumerates a Weyl group, checks its order against the product formula and
// moves a weight into the dominant chamber.

use qkostant::{to_dominant_chamber, weyl_order, RootSystem, Result, Weight, WeylGroup, DEFAULT_WEYL_CAP};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    for name in ["A3", "B3", "G2", "D4"] {
        let rs = RootSystem::from_type(name.parse()?);
        let w = WeylGroup::new(&rs, DEFAULT_WEYL_CAP)?;
        let longest = w.longest();
        out += &format!(
            "|W({name})| = {} (formula {}), longest element has length {} = #Φ+\n",
            w.len(),
            weyl_order(rs.cartan_type()),
            longest.length(),
        );
        assert_eq!(longest.length(), rs.positive_roots().len());
    }

    // w0 sends ρ to -ρ in every type
    let b3 = RootSystem::from_type("B3".parse()?);
    let w = WeylGroup::new(&b3, DEFAULT_WEYL_CAP)?;
    out += &format!("w0(ρ) = {} in B3\n", w.longest().apply(&b3.rho())?);

    let lambda = Weight::new(vec![-1, 3, -2]);
    let ch = to_dominant_chamber(&b3, &lambda)?;
    out += &format!(
        "{lambda} ~ {} via s_{:?} (sign {}, regular: {})\n",
        ch.dominant_rep,
        ch.element.reduced_word().iter().map(|i| i + 1).collect::<Vec<_>>(),
        ch.element.sign(),
        ch.regular
    );
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
