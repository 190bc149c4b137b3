//! The expression language: parsing, evaluation, rendering and diagnostics.
//!
//!     cargo run --example expressions

use dimcalc::expr::{evaluate, from_structured, parse, render, Env, Format, Value};
use dimcalc::ExtNat;

fn main() {
    let mut env = Env::new();
    env.insert("n".into(), Value::Nat(ExtNat::Finite(7)));

    let inputs = [
        "{q=2; *=3-; 5=4+}",
        "dim(B(4) boxplus B(4))",
        "({q=2; *=3-} oplus {q=n-4; *=(n-5)+}) + 1 == B(n)",
        "{q=3; *=4-}*",
        "(B(4) boxplus {q=1; *=2-})*",
        "sigma(Z/2 + Z/12 + Zloc(5))",
        "dimg(B(3), Z/4)",
        "C(3) <= B(4)",
        // diagnostics carry a line:column position
        "{q=2; *=3-",
        "{q=2; 4=3+}",
        "B(3) boxplus Z/2",
    ];
    for src in inputs {
        match parse(src).and_then(|e| evaluate(&e, &env)) {
            Ok(v) => println!("{src}\n  = {}", render(&v, Format::Pretty)),
            Err(e) => println!("{src}\n  error: {e}"),
        }
    }

    let v = evaluate(&parse("B(5) oplus {q=1; *=1+; 2=3-}").unwrap(), &env).unwrap();
    let json = render(&v, Format::Structured);
    println!("structured:\n{json}");
    assert_eq!(from_structured(&json).unwrap(), v);
}
