//! The Lobachevsky function at arbitrary precision.

use qknot::lobachevsky::{figure_eight_volume, lobachevsky_f64, lobachevsky_pi_rational};
use qknot::BigComplex;

fn main() {
    for (num, den) in [(1, 6), (1, 4), (1, 3), (1, 2), (5, 6)] {
        let value = BigComplex::from_real(lobachevsky_pi_rational(num, den, 128), 128);
        println!("Lambda({num}pi/{den}) = {}", value.re_f64());
    }
    println!("Lambda(1.0)    = {}", lobachevsky_f64(1.0));
    let v = BigComplex::from_real(figure_eight_volume(512), 512);
    println!("6 Lambda(pi/3) = {}", v.to_decimal_string());
}
