// Root data for a simple type: Cartan matrix, positive roots in both bases,
// the highest root and ρ.
//
//     cargo run --example root_data -- B3

use qkostant::{pairing, CartanType, Result, RootSystem};

pub fn run_example(name: &str) -> Result<String> {
    let t: CartanType = name.parse()?;
    let rs = RootSystem::from_type(t);
    let mut out = format!("type {t}, rank {}\nCartan matrix:\n", rs.rank());
    for row in rs.cartan() {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>3}")).collect();
        out += &format!("  [{}]\n", cells.join(""));
    }
    out += &format!("{} positive roots (simple-root coords -> weight coords):\n", rs.positive_roots().len());
    for (root, weight) in rs.positive_roots().iter().zip(rs.positive_root_weights()) {
        out += &format!("  {:?} -> {weight}\n", root.coords());
    }
    let theta = rs.root_to_weight(rs.highest_root())?;
    out += &format!("highest root {:?} = {theta}\n", rs.highest_root().coords());
    let coroot_pairings: Vec<i64> = (1..=rs.rank()).map(|i| pairing(&rs, &theta, i)).collect::<Result<_>>()?;
    out += &format!("<θ, α_i^∨> = {coroot_pairings:?}\nρ = {}\n", rs.rho());
    Ok(out)
}

fn main() -> Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "G2".to_string());
    print!("{}", run_example(&name)?);
    Ok(())
}
