// Standard parabolics: nilradical roots, 2ρ_P, the Hermitian-symmetric test,
// and which known vanishing case (if any) covers a given μ.

use qkostant::{
    is_hermitian_symmetric, nilradical_roots, two_rho_p, vanishing_case, ParabolicSubset, Result, RootSystem,
    Weight,
};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let c3 = RootSystem::from_type("C3".parse()?);
    for i in 1..=3 {
        // the maximal parabolic that omits α_i
        let levi: Vec<usize> = (1..=3).filter(|&j| j != i).collect();
        let p = ParabolicSubset::from_bourbaki(&c3, &levi)?;
        out += &format!(
            "C3 Π={p}: dim n = {}, 2ρ_P = {}, Hermitian symmetric: {}\n",
            nilradical_roots(&c3, &p)?.len(),
            two_rho_p(&c3, &p)?,
            is_hermitian_symmetric(&c3, &p)?
        );
    }

    let cases: &[(&str, &str, &[i64])] = &[
        ("A2", "", &[1, 0]),
        ("A2", "1", &[0, 2]),
        ("A3", "1,3", &[1, 0, 1]),
        ("A3", "1,2", &[1, 1, 0]),
        ("B3", "1,2", &[0, 0, 1]),
        ("A1", "", &[-2]),
    ];
    for &(t, levi, mu) in cases {
        let rs = RootSystem::from_type(t.parse()?);
        let p = ParabolicSubset::parse(&rs, levi)?;
        let mu = Weight::new(mu.to_vec());
        let case = vanishing_case(&rs, &p, &mu)?;
        out += &format!("{t} Π={p} μ={mu}: {case}{}\n", if case.is_covered() { "" } else { " (conjectural)" });
    }
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
