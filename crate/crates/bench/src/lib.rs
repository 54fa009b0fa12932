//! Fixtures shared by the benchmarks.

use z2z4::{catalog, ladder_build, AdditiveCode, SelfDualClass};

/// A named code used as benchmark input.
pub struct Fixture {
    pub name: String,
    pub code: AdditiveCode,
}

/// Catalog codes plus a few larger ladder products.
pub fn fixtures() -> Vec<Fixture> {
    let mut out: Vec<Fixture> = ["C1", "C3", "C4", "C6"]
        .iter()
        .map(|n| Fixture {
            name: (*n).to_string(),
            code: catalog(n).expect("catalog entry").code,
        })
        .collect();
    for (alpha, beta, cls) in [
        (8, 6, SelfDualClass::Type0),
        (10, 7, SelfDualClass::TypeI),
        (16, 4, SelfDualClass::TypeII),
    ] {
        out.push(Fixture {
            name: format!("ladder-{cls}-{alpha}-{beta}").replace(' ', ""),
            code: ladder_build(alpha, beta, cls, None).expect("admissible cell"),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    #[test]
    fn fixtures_build() {
        let f = super::fixtures();
        assert_eq!(f.len(), 7);
        assert!(f.iter().all(|x| z2z4::is_self_dual(&x.code)));
    }
}
