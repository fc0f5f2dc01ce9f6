use santalo_lab_core::geometry::{self, cube};
use santalo_lab_core::santalo::integrate_over_polytope;

#[test]
fn probe() {
    let sq = cube(2, 1.0);
    let polar = geometry::polar(&sq).unwrap();
    let pd = polar.polytope().unwrap();
    println!("polar vertices: {:?}", pd.vertices);
    println!("num simplices: {}", pd.simplices.len());
    for s in &pd.simplices {
        println!("simplex: {:?}", s);
    }
    let f = |x: &[f64]| (1.0 - 0.3 * x[0]).powi(-3);
    let v = integrate_over_polytope(&polar, &f, 1e-12);
    println!("value {v:.15}");
}
