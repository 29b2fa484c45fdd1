//! Arithmetic in the big Witt ring of Q.
//!
//! Elements are power series 1 + a_1 t + ... + a_N t^N truncated at a
//! fixed order. Witt addition is series multiplication; the product is
//! determined by making one-dimensional classes multiply coordinatewise,
//! (1 - at)(1 - bt) = 1 - abt. Ghost components turn both operations
//! into ordinary componentwise arithmetic over Q.

use grothwitt::witt::LambdaSeries;
use grothwitt::{parse_rat, Error, Rat};

fn series(csv: &str) -> LambdaSeries {
    let coeffs = csv.split(',').map(|s| parse_rat(s).unwrap()).collect();
    LambdaSeries::new(coeffs).unwrap()
}

fn main() -> Result<(), Error> {
    let f = series("1/2,-3,7/5,0,2,1,1,-4");
    let g = series("-1,1/3,0,5,5,-2/7,1,9");

    let sum = f.add(&g)?;
    let prod = f.mul(&g)?;
    println!("f       = 1 + ({})t + ...", f.coeff(1));
    println!("f + g   = 1 + ({})t + ...", sum.coeff(1));
    println!("f * g   = 1 + ({})t + ...", prod.coeff(1));

    // Ghost components linearize everything.
    let (gf, gg) = (f.ghost(), g.ghost());
    let (gs, gp) = (sum.ghost(), prod.ghost());
    for nu in 0..f.precision() {
        assert_eq!(gs[nu], &gf[nu] + &gg[nu]);
        assert_eq!(gp[nu], &gf[nu] * &gg[nu]);
    }
    println!("\nghost(f)     = {}", show(&gf));
    println!("ghost(g)     = {}", show(&gg));
    println!("ghost(f + g) = {}", show(&gs));
    println!("ghost(f * g) = {}", show(&gp));

    // One-dimensional classes multiply to one-dimensional classes.
    let a = parse_rat("5/3")?;
    let b = parse_rat("-7/2")?;
    let line = LambdaSeries::linear(&a, 8).mul(&LambdaSeries::linear(&b, 8))?;
    assert_eq!(line, LambdaSeries::linear(&(&a * &b), 8));
    println!("\n(1 - ({a}) t) * (1 - ({b}) t) = 1 - ({}) t", &a * &b);

    // Frobenius picks every m-th ghost component; Verschiebung spreads
    // the series onto powers of t^m and multiplies ghosts by m on the
    // indices m divides.
    let f3 = f.frobenius(2)?;
    let gf3 = f3.ghost();
    for (nu, c) in gf3.iter().enumerate() {
        assert_eq!(*c, gf[2 * (nu + 1) - 1]);
    }
    println!("ghost(F_2 f) = {}", show(&gf3));

    let v = f.verschiebung(3)?;
    let gv = v.ghost();
    let three = Rat::from_integer(3.into());
    for (nu, c) in gv.iter().enumerate() {
        if (nu + 1) % 3 == 0 {
            assert_eq!(*c, &three * &gf[(nu + 1) / 3 - 1]);
        } else {
            assert_eq!(*c, Rat::from_integer(0.into()));
        }
    }
    println!("ghost(V_3 f) = {}", show(&gv));
    println!("\nF_m V_m acts as multiplication by m:");
    let fv = f.verschiebung(4)?.frobenius(4)?;
    let four = Rat::from_integer(4.into());
    for (nu, c) in fv.ghost().iter().enumerate() {
        assert_eq!(*c, &four * &gf[nu]);
    }
    println!("ghost(F_4 V_4 f) = 4 * ghost(f)  (checked exactly)");
    Ok(())
}

fn show(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().take(4).map(|c| c.to_string()).collect();
    format!("({}, ...)", parts.join(", "))
}
