//! Runs every example under the test harness so they cannot rot.

macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));
        }
    };
}

example!(root_data);
example!(weyl_group);
example!(parabolic_vanishing);
example!(partition_function);
example!(lusztig_polynomials);
example!(characters_bwb);
example!(hilbert_series);

#[test]
fn root_data_g2() {
    let out = root_data::run_example("G2").unwrap();
    assert!(out.contains("[  2 -3]"));
    assert!(out.contains("highest root [3, 2] = (0,1)"));
    for t in ["A1", "B3", "C4", "D5", "E6", "E7", "E8", "F4"] {
        root_data::run_example(t).unwrap();
    }
    assert!(root_data::run_example("D2").is_err());
}

#[test]
fn weyl_group_orders() {
    let out = weyl_group::run_example().unwrap();
    assert!(out.contains("|W(D4)| = 192 (formula 192)"));
    assert!(out.contains("w0(ρ) = (-1,-1,-1)"));
}

#[test]
fn parabolic_cases() {
    let out = parabolic_vanishing::run_example().unwrap();
    assert!(out.contains("C3 Π={1,2}: dim n = 6, 2ρ_P = (0,0,4), Hermitian symmetric: true"));
    assert!(out.contains("A1 Π={} μ=(-2): Unknown (conjectural)"));
}

#[test]
fn partition_g2() {
    let out = partition_function::run_example().unwrap();
    assert!(out.contains("at q=1: 27"));
    assert!(out.contains("truncated: true"));
}

#[test]
fn lusztig_exponents() {
    let out = lusztig_polynomials::run_example().unwrap();
    assert!(out.contains("G2: m_θ^0(q) = q + q^5"));
    assert!(out.contains("B3: m_θ^0(q) = q + q^3 + q^5"));
}

#[test]
fn characters_and_bwb() {
    let out = characters_bwb::run_example().unwrap();
    assert!(out.contains("dim 16 (Weyl: 16)"));
    assert!(out.contains("τ = (-1): χ(G/B, L_-τ) = 0"));
    assert!(out.contains("τ = (-4): χ(G/B, L_-τ) = -1 ch V(2)^*"));
}

#[test]
fn hilbert_two_routes() {
    let out = hilbert_series::run_example().unwrap();
    assert!(out.contains("dims 1 3 5 7 9 11"));
    assert!(out.contains("\"dims\":[6,64,350]"));
}
