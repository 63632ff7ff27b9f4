use qgamma::geometry::frac_radial::RadialTransform;
use qgamma::geometry::radial::{default_grid, RadialFunction};
use qgamma::make_params;

fn main() {
    let params = make_params(3, 1.0).unwrap();
    let w = RadialFunction::from_fn(default_grid(), |r| (1.0 + r * r).powf(-0.5), -1.0).unwrap();
    let t0 = std::time::Instant::now();
    let t = RadialTransform::new(&w, &params).unwrap();
    println!("build time {:?}, cutoff {}", t0.elapsed(), t.spectral_cutoff);
    let exact = 4.0 * std::f64::consts::PI * 0.13986588181652243 / 2.0;
    let got = t.fourier(2.0);
    println!("fourier(2) = {got} vs {exact}, rel {:.2e}", (got - exact).abs() / exact);
    for rho in [0.25f64, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 22.6, 32.0, 45.0, 64.0, 128.0, 256.0] {
        println!("g({rho}) = {:.6e}", t.g(rho));
    }
}
