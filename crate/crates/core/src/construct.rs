//! Constructions of self-dual codes: direct products, the existence ladder,
//! the neighbor construction, and a catalog of small named codes.

use crate::algebra::{AmbientParams, MixedVector};
use crate::classify::{admissibility_violation, classify, AdmissibilityQuery, SelfDualClass};
use crate::code::{span, AdditiveCode, GeneratorMatrix, TypeParams};
use crate::duality::is_self_dual;
use crate::error::{Error, Result};
use crate::guard::Guard;

/// A named code with the attributes it is known to have.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub code: AdditiveCode,
    pub class: SelfDualClass,
    pub separable: bool,
    /// Full type, where it is known independently of the code.
    pub params: Option<TypeParams>,
}

impl CatalogEntry {
    /// Recomputes every expected attribute from the code.
    pub fn verify(&self) -> Result<()> {
        let mismatch = |what: &str, expected: String, got: String| {
            Err(Error::invariant(format!(
                "catalog entry {}: expected {what} {expected}, computed {got}",
                self.name
            )))
        };
        let class = classify(&self.code);
        if class != self.class {
            return mismatch("class", self.class.to_string(), class.to_string());
        }
        let separable = self.code.is_separable();
        if separable != self.separable {
            return mismatch("separability", self.separable.to_string(), separable.to_string());
        }
        if let Some(p) = self.params {
            let got = self.code.type_params();
            if got != p {
                return mismatch("type", p.to_string(), got.to_string());
            }
        }
        Ok(())
    }
}

/// Names accepted by [`catalog`].
pub const CATALOG_NAMES: [&str; 10] = [
    "C1",
    "C2",
    "C3",
    "C4",
    "C5",
    "C6",
    "Gprime",
    "Gdoubleprime",
    "Hamming8",
    "D4",
];

const HAMMING8: [&str; 4] = ["11110000|", "00111100|", "00001111|", "01010101|"];
const QUATERNARY_TYPE_II: [&str; 3] = ["|2200", "|2020", "|1111"];

fn from_rows(alpha: usize, beta: usize, rows: &[&str]) -> Result<AdditiveCode> {
    span(&GeneratorMatrix::from_literals(alpha, beta, rows)?)
}

/// Looks up one of [`CATALOG_NAMES`].
pub fn catalog(name: &str) -> Result<CatalogEntry> {
    use SelfDualClass::*;
    let entry = |name, code, class, separable, params| CatalogEntry {
        name,
        code,
        class,
        separable,
        params,
    };
    Ok(match name {
        "C1" => entry(
            "C1",
            from_rows(2, 2, &["11|20", "01|11"])?,
            Type0,
            false,
            Some(TypeParams::new(2, 2, 1, 1, 1)),
        ),
        "C2" => entry(
            "C2",
            from_rows(2, 1, &["11|0", "00|2"])?,
            TypeI,
            true,
            Some(TypeParams::new(2, 1, 2, 0, 1)),
        ),
        "C3" => entry(
            "C3",
            from_rows(
                4,
                4,
                &["1111|0000", "0101|2000", "0101|0200", "0101|0020", "0011|1111"],
            )?,
            TypeI,
            false,
            None,
        ),
        "C4" => entry(
            "C4",
            from_rows(
                4,
                6,
                &[
                    "1111|000000",
                    "0101|220000",
                    "0000|202000",
                    "0101|000200",
                    "0101|111010",
                    "0011|101101",
                ],
            )?,
            TypeI,
            false,
            None,
        ),
        "C5" => entry(
            "C5",
            direct_product(&from_rows(8, 0, &HAMMING8)?, &from_rows(0, 4, &QUATERNARY_TYPE_II)?)?,
            TypeII,
            true,
            Some(TypeParams::new(8, 4, 6, 1, 4)),
        ),
        "C6" => entry(
            "C6",
            from_rows(
                8,
                4,
                &[
                    "10010110|0000",
                    "01001110|0000",
                    "00100111|0000",
                    "00000110|2000",
                    "00000110|0200",
                    "00000110|0020",
                    "00011011|1111",
                ],
            )?,
            TypeII,
            false,
            Some(TypeParams::new(8, 4, 6, 1, 4)),
        ),
        "Gprime" => entry(
            "Gprime",
            from_rows(2, 0, &["11|"])?,
            TypeI,
            true,
            Some(TypeParams::new(2, 0, 1, 0, 1)),
        ),
        "Gdoubleprime" => entry(
            "Gdoubleprime",
            from_rows(0, 1, &["|2"])?,
            TypeI,
            true,
            Some(TypeParams::new(0, 1, 1, 0, 0)),
        ),
        "Hamming8" => entry(
            "Hamming8",
            from_rows(8, 0, &HAMMING8)?,
            TypeII,
            true,
            Some(TypeParams::new(8, 0, 4, 0, 4)),
        ),
        "D4" => entry(
            "D4",
            from_rows(0, 4, &QUATERNARY_TYPE_II)?,
            TypeII,
            true,
            Some(TypeParams::new(0, 4, 2, 1, 0)),
        ),
        other => return Err(Error::UnknownCatalog(other.to_string())),
    })
}

/// `C x D`: binary parts adjacent, quaternary parts adjacent.
pub fn direct_product(c: &AdditiveCode, d: &AdditiveCode) -> Result<AdditiveCode> {
    let (a, b) = (c.ambient(), d.ambient());
    let ambient = a.concat(&b)?;
    let zero_a = MixedVector::zero(a);
    let zero_b = MixedVector::zero(b);
    let mut rows = Vec::with_capacity(c.generators().len() + d.generators().len());
    for g in c.generators().rows() {
        rows.push(g.concat(&zero_b)?);
    }
    for g in d.generators().rows() {
        rows.push(zero_a.concat(g)?);
    }
    span(&GeneratorMatrix::new(ambient, rows)?)
}

fn power(block: &AdditiveCode, times: usize, acc: AdditiveCode) -> Result<AdditiveCode> {
    (0..times).try_fold(acc, |acc, _| direct_product(&acc, block))
}

/// A self-dual code on `(alpha, beta)` of the requested class, built as a
/// product of a minimal base code with the step codes `(1 1)`, `(2)`, the
/// extended Hamming code of length 8 and the quaternary Type II code of
/// length 4.
///
/// With `separable = None` the separable variant is preferred when it exists.
pub fn ladder_build(
    alpha: usize,
    beta: usize,
    cls: SelfDualClass,
    separable: Option<bool>,
) -> Result<AdditiveCode> {
    let query = AdmissibilityQuery::new(alpha, beta, cls, separable);
    if let Some(reason) = admissibility_violation(&query)? {
        return Err(Error::precondition(format!(
            "no self-dual {cls} code on ({alpha}, {beta}): {reason}"
        )));
    }
    let separable = match separable {
        Some(s) => s,
        None => admissibility_violation(&AdmissibilityQuery::new(alpha, beta, cls, Some(true)))
            .map(|v| v.is_none())
            .unwrap_or(false),
    };
    let g_prime = catalog("Gprime")?.code;
    let g_double = catalog("Gdoubleprime")?.code;
    let hamming = catalog("Hamming8")?.code;
    let quaternary = catalog("D4")?.code;
    let empty = |a, b| AmbientParams::new(a, b).map(AdditiveCode::zero);

    let built = if alpha == 0 || beta == 0 {
        let (block, count) = match (cls, alpha == 0) {
            (SelfDualClass::TypeII, true) => (&quaternary, beta / 4),
            (SelfDualClass::TypeII, false) => (&hamming, alpha / 8),
            (_, true) => (&g_double, beta),
            (_, false) => (&g_prime, alpha / 2),
        };
        power(block, count, empty(0, 0)?)?
    } else {
        let (base, a0, b0) = match (cls, separable) {
            (SelfDualClass::Type0, _) => ("C1", 2, 2),
            (SelfDualClass::TypeI, true) => ("C2", 2, 1),
            (SelfDualClass::TypeI, false) => ("C3", 4, 4),
            (SelfDualClass::TypeII, true) => ("C5", 8, 4),
            (SelfDualClass::TypeII, false) => ("C6", 8, 4),
            (SelfDualClass::NotSelfDual, _) => unreachable!("rejected by admissibility"),
        };
        let base = catalog(base)?.code;
        if cls == SelfDualClass::TypeII {
            let c = power(&hamming, (alpha - a0) / 8, base)?;
            power(&quaternary, (beta - b0) / 4, c)?
        } else {
            let c = power(&g_prime, (alpha - a0) / 2, base)?;
            power(&g_double, beta - b0, c)?
        }
    };

    let got = classify(&built);
    if got != cls || built.is_separable() != separable {
        return Err(Error::invariant(format!(
            "ladder produced a {got} code with separable = {} for a {cls} request",
            built.is_separable()
        )));
    }
    Ok(built)
}

/// `<{w in C : <w, v> = 0}, v>` for a self-dual `C` and a self-orthogonal
/// `v` outside `C`. The result is self-dual with `|C|` codewords, and Type 0
/// when `v` has odd weight.
pub fn neighbor(c: &AdditiveCode, v: &MixedVector) -> Result<AdditiveCode> {
    if v.shape() != c.ambient() {
        return Err(Error::ShapeMismatch(c.ambient(), v.shape()));
    }
    if !is_self_dual(c) {
        return Err(Error::precondition("neighbor construction needs a self-dual code"));
    }
    if v.dot(v) != 0 {
        return Err(Error::precondition(format!("{v} is not self-orthogonal")));
    }
    if c.contains(v) {
        return Err(Error::precondition(format!("{v} already lies in the code")));
    }
    let kept: Vec<MixedVector> = c.codewords().iter().copied().filter(|w| w.dot(v) == 0).collect();
    let subcode = AdditiveCode::from_subgroup(c.ambient(), kept)?;
    let mut rows = subcode.generators().rows().to_vec();
    rows.push(*v);
    let d = span(&GeneratorMatrix::new(c.ambient(), rows)?)?;
    if d.len() != c.len() || !is_self_dual(&d) {
        return Err(Error::invariant(format!(
            "neighbor through {v} has {} codewords and is not self-dual",
            d.len()
        )));
    }
    Ok(d)
}

/// First vector, in lexicographic order, that can serve in [`neighbor`]:
/// self-orthogonal, outside `c`, and of the requested weight parity if any.
pub fn neighbor_vector(c: &AdditiveCode, odd_weight: Option<bool>) -> Result<Option<MixedVector>> {
    Guard::current().check_oracle(c.ambient())?;
    Ok(c.ambient().vectors().find(|v| {
        v.dot(v) == 0
            && !c.contains(v)
            && odd_weight.is_none_or(|odd| (v.weight() % 2 == 1) == odd)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_catalog_entry_verifies() {
        for name in CATALOG_NAMES {
            let e = catalog(name).unwrap();
            assert_eq!(e.name, name);
            assert!(is_self_dual(&e.code), "{name}");
            e.verify().unwrap();
        }
        assert!(matches!(catalog("C7"), Err(Error::UnknownCatalog(_))));
    }

    #[test]
    fn catalog_generators_are_stored_verbatim() {
        let c1 = catalog("C1").unwrap().code;
        let rows: Vec<String> = c1.generators().rows().iter().map(ToString::to_string).collect();
        assert_eq!(rows, ["11|20", "01|11"]);
        assert_eq!(catalog("C4").unwrap().code.generators().len(), 6);
        assert_eq!(catalog("D4").unwrap().code.ambient(), AmbientParams::new(0, 4).unwrap());
    }

    #[test]
    fn products() {
        let c5 = catalog("C5").unwrap().code;
        assert_eq!(c5.len(), 256);
        let c1 = catalog("C1").unwrap().code;
        let unit = AdditiveCode::zero(AmbientParams::new(0, 0).unwrap());
        assert!(direct_product(&c1, &unit).unwrap().same_set(&c1));
        let sq = direct_product(&c1, &c1).unwrap();
        assert_eq!(sq.type_params(), TypeParams::new(4, 4, 2, 2, 2));
        assert_eq!(classify(&sq), SelfDualClass::Type0);
        assert!(sq.contains(&"1101|2011".parse().unwrap()));
    }

    #[test]
    fn ladder_examples() {
        let c = ladder_build(4, 3, SelfDualClass::Type0, None).unwrap();
        assert_eq!(classify(&c), SelfDualClass::Type0);
        let c1 = catalog("C1").unwrap().code;
        let expected = direct_product(
            &direct_product(&c1, &catalog("Gprime").unwrap().code).unwrap(),
            &catalog("Gdoubleprime").unwrap().code,
        )
        .unwrap();
        assert!(c.same_set(&expected));
        let c2 = ladder_build(2, 1, SelfDualClass::TypeI, Some(true)).unwrap();
        assert!(c2.same_set(&catalog("C2").unwrap().code));
        let big = ladder_build(16, 8, SelfDualClass::TypeII, Some(false)).unwrap();
        assert_eq!(classify(&big), SelfDualClass::TypeII);
        assert_eq!(big.ambient().length() % 8, 0);
        assert!(ladder_build(2, 1, SelfDualClass::Type0, None).is_err());
        assert!(ladder_build(0, 4, SelfDualClass::TypeII, None).is_ok());
        assert!(ladder_build(6, 0, SelfDualClass::TypeI, None).is_ok());
    }

    #[test]
    fn neighbors() {
        let c1 = catalog("C1").unwrap().code;
        let s: MixedVector = "11|22".parse().unwrap();
        let d = neighbor(&c1, &s).unwrap();
        assert!(is_self_dual(&d));
        assert_ne!(classify(&d), SelfDualClass::Type0);
        assert!(d.contains(&s));
        assert!(neighbor(&c1, &"01|11".parse().unwrap()).is_err());
        assert!(neighbor(&c1, &"10|00".parse().unwrap()).is_err());

        let c = direct_product(&catalog("C2").unwrap().code, &catalog("Gdoubleprime").unwrap().code)
            .unwrap();
        let v = neighbor_vector(&c, Some(true)).unwrap().unwrap();
        let d = neighbor(&c, &v).unwrap();
        assert_eq!(classify(&d), SelfDualClass::Type0);
        assert_eq!(d.len(), c.len());
    }
}
