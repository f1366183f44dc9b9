//! Factor a few polynomials over Q and over a quadratic field.

use quintic_fields::exactmath::polyq::{format_poly, parse_poly, polyq};
use quintic_fields::exactmath::rational::rat;
use quintic_fields::exactmath::QuadField;
use quintic_fields::factor::{decomposition_type, factor_over_quadratic, factor_over_rationals, FoldPolicy};

fn main() -> quintic_fields::Result<()> {
    // Swinnerton-Dyer style: irreducible over Q, splits over Q(sqrt 2)
    let f = parse_poly("x^4 - 10*x^2 + 1")?;
    let fz = factor_over_rationals(&f)?;
    println!("{} = {fz}", format_poly(&f));

    let (k, _) = QuadField::from_radicand(&rat(2))?;
    let g = f.map(k.clone(), |c| {
        quintic_fields::exactmath::Field::from_rational(&k, c).unwrap()
    });
    let gz = factor_over_quadratic(&g)?;
    println!("over Q(sqrt 2): {} factors", gz.factors.len());

    // (X - 1)^2 (X^2 + 1)(X^5 - X - 1)
    let h = polyq(&[-1, 1])
        .pow(2)
        .mul(&polyq(&[1, 0, 1]))
        .mul(&polyq(&[-1, -1, 0, 0, 0, 1]));
    let hz = factor_over_rationals(&h)?;
    for policy in [FoldPolicy::Fold, FoldPolicy::Split] {
        let dts: Vec<String> = decomposition_type(&hz, policy).iter().map(|d| d.to_string()).collect();
        println!("{policy:?}: {}", dts.join(" | "));
    }
    Ok(())
}
