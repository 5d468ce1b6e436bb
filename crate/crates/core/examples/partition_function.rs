// The q-analog partition function ℘_{P,q}(ν), which counts the ways of
// writing ν as a sum of nilradical roots, graded by the number of summands.

use qkostant::{
    nilradical_roots, partition_q, weights_of_degree, ParabolicSubset, PartitionFunction, Result, RootSystem,
    Weight,
};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let g2 = RootSystem::from_type("G2".parse()?);
    let all = g2.positive_roots().to_vec();

    // 2θ for G2 in weight coordinates
    let nu = g2.root_to_weight(g2.highest_root())?;
    let nu = nu.checked_add(&nu)?;
    let full = partition_q(&g2, &all, &nu, None)?;
    out += &format!("G2: ℘_q(2θ) = {}\n     at q=1: {}\n", full.poly, full.poly.eval(1)?);
    let cut = partition_q(&g2, &all, &nu, Some(3))?;
    out += &format!("     truncated to degree 3: {} (truncated: {})\n", cut.poly, cut.truncated);

    // a reusable, memoized evaluator for a parabolic
    let p = ParabolicSubset::parse(&g2, "2")?;
    let pf = PartitionFunction::for_parabolic(&g2, &p)?;
    for target in [[0, 1], [2, 0], [1, 1], [0, 2]] {
        let w = Weight::new(target.to_vec());
        out += &format!("Π={p}: ℘_P,q({w}) = {}\n", pf.value(&w, None)?.poly);
    }
    out += &format!("memo entries: {}\n", pf.memo_len());

    let xi = nilradical_roots(&g2, &p)?;
    for (w, count) in weights_of_degree(&g2, &xi, 2)? {
        out += &format!("  Sym^2 weight {w} × {count}\n");
    }
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
