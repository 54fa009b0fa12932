//! Built-in checks on the catalog codes and the structural results,
//! runnable from the command line.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AmbientParams, MixedVector};
use crate::classify::{
    admissible, binary_kernel_self_dual, check_structure_relations, classify,
    separability_predicates, weight_congruences_hold, AdmissibilityQuery, SelfDualClass,
};
use crate::code::{span, AdditiveCode, GeneratorMatrix, TypeParams};
use crate::construct::{catalog, ladder_build, neighbor, neighbor_vector, CATALOG_NAMES};
use crate::duality::{brute_force_dual, dual, dual_type, is_self_dual};
use crate::enumerator::{gleason_decompose, WeightEnumerator};
use crate::error::Result;
use crate::search::{search, SearchOptions};
use crate::shadow::{decompose, glue, non_type0_neighbors, orthogonality_table, shadow, ORTHOGONALITY_TABLE};

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, outcome: Result<Option<String>>) -> Check {
    match outcome {
        Ok(None) => Check {
            name,
            passed: true,
            detail: String::new(),
        },
        Ok(Some(why)) => Check {
            name,
            passed: false,
            detail: why,
        },
        Err(e) => Check {
            name,
            passed: false,
            detail: format!("error: {e}"),
        },
    }
}

/// `None` when `ok`, otherwise the message.
fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Option<String> {
    if ok {
        None
    } else {
        Some(msg())
    }
}

fn first_failure(items: impl IntoIterator<Item = Option<String>>) -> Option<String> {
    items.into_iter().flatten().next()
}

/// A random generator matrix with up to `max_rows` rows.
pub fn random_generators(rng: &mut impl Rng, ambient: AmbientParams, max_rows: usize) -> GeneratorMatrix {
    let rows = (0..rng.gen_range(0..=max_rows))
        .map(|_| {
            let mut v = MixedVector::zero(ambient);
            for i in 0..ambient.alpha() {
                v.set_binary(i, rng.gen_range(0..2));
            }
            for j in 0..ambient.beta() {
                v.set_quaternary(j, rng.gen_range(0..4));
            }
            v
        })
        .collect();
    GeneratorMatrix::new(ambient, rows).expect("rows have the ambient shape")
}

/// A random ambient with `alpha + 2 beta <= max_length`, not both zero.
pub fn random_ambient(rng: &mut impl Rng, max_length: usize) -> AmbientParams {
    loop {
        let beta = rng.gen_range(0..=max_length / 2);
        let alpha = rng.gen_range(0..=max_length - 2 * beta);
        if alpha + beta > 0 {
            return AmbientParams::new(alpha, beta).expect("small ambient");
        }
    }
}

fn c1() -> Result<Option<String>> {
    let c = catalog("C1")?.code;
    let w = WeightEnumerator::of_code(&c).to_string();
    Ok(first_failure([
        ensure(c.len() == 8, || format!("|C1| = {}", c.len())),
        ensure(c.type_params() == TypeParams::new(2, 2, 1, 1, 1), || {
            format!("type {}", c.type_params())
        }),
        ensure(classify(&c) == SelfDualClass::Type0, || format!("class {}", classify(&c))),
        ensure(w == "x^6 + 4*x^3*y^3 + 3*x^2*y^4", || format!("W = {w}")),
    ]))
}

fn c1_even_subcode_and_shadow() -> Result<Option<String>> {
    let c = catalog("C1")?.code;
    let w = WeightEnumerator::of_code(&c);
    let even = w.even_subcode().to_string();
    let sh = w.shadow()?.to_string();
    let set = shadow(&c)?;
    let mut expected: Vec<MixedVector> =
        ["00|02", "00|20", "01|13", "01|31", "10|11", "10|33", "11|00", "11|22"]
            .iter()
            .map(|l| l.parse())
            .collect::<Result<_>>()?;
    expected.sort_unstable();
    Ok(first_failure([
        ensure(even == "x^6 + 3*x^2*y^4", || format!("W_C0 = {even}")),
        ensure(sh == "3*x^4*y^2 + 4*x^3*y^3 + y^6", || format!("W_S = {sh}")),
        ensure(set == expected, || format!("shadow = {set:?}")),
    ]))
}

fn catalog_class(name: &str, cls: SelfDualClass, separable: bool) -> Result<Option<String>> {
    let c = catalog(name)?.code;
    let report = check_structure_relations(&c)?;
    Ok(first_failure([
        ensure(is_self_dual(&c), || format!("{name} is not self-dual")),
        ensure(report.class == cls, || format!("{name} has class {}", report.class)),
        ensure(report.separable == separable, || format!("{name}: separable = {}", report.separable)),
        ensure(report.consistent(), || format!("{name}: relations fail: {report:?}")),
    ]))
}

fn c2() -> Result<Option<String>> {
    let c = catalog("C2")?.code;
    Ok(first_failure([
        catalog_class("C2", SelfDualClass::TypeI, true)?,
        ensure(c.type_params() == TypeParams::new(2, 1, 2, 0, 1), || format!("type {}", c.type_params())),
        ensure(c.is_antipodal(), || "C2 is not antipodal".into()),
    ]))
}

fn c3_and_c4() -> Result<Option<String>> {
    let mut out = Vec::new();
    for name in ["C3", "C4"] {
        out.push(catalog_class(name, SelfDualClass::TypeI, false)?);
        let p = catalog(name)?.code.type_params();
        out.push(ensure(p.delta >= 1, || format!("{name} has delta = 0")));
    }
    Ok(first_failure(out))
}

fn c5() -> Result<Option<String>> {
    let c = catalog("C5")?.code;
    let w = WeightEnumerator::of_code(&c);
    Ok(first_failure([
        catalog_class("C5", SelfDualClass::TypeII, true)?,
        ensure(c.ambient().length() == 16, || "length is not 16".into()),
        gleason_decompose(&w, SelfDualClass::TypeII)
            .err()
            .map(|e| format!("no Type II expansion: {e}")),
    ]))
}

fn c6() -> Result<Option<String>> {
    let c = catalog("C6")?.code;
    Ok(first_failure([
        catalog_class("C6", SelfDualClass::TypeII, false)?,
        ensure(c.len() == 256, || format!("|C6| = {}", c.len())),
    ]))
}

/// Compares the two dual constructions and the size and type identities.
pub fn duality_identities(code: &AdditiveCode) -> Result<Option<String>> {
    let d = dual(code)?;
    let oracle = brute_force_dual(code)?;
    let p = code.type_params();
    Ok(first_failure([
        ensure(d.same_set(&oracle), || format!("dual differs from the oracle for {:?}", code.generators().rows())),
        ensure(code.log2_size() + d.log2_size() == code.ambient().length(), || {
            "sizes of code and dual do not multiply to 2^n".into()
        }),
        ensure(dual_type(&p).ok() == Some(d.type_params()), || {
            format!("dual of {p} has type {}", d.type_params())
        }),
    ]))
}

fn oracle_equivalence() -> Result<Option<String>> {
    for name in CATALOG_NAMES {
        if let Some(f) = duality_identities(&catalog(name)?.code)? {
            return Ok(Some(format!("{name}: {f}")));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..100 {
        let ambient = random_ambient(&mut rng, 10);
        let code = span(&random_generators(&mut rng, ambient, 5))?;
        if let Some(f) = duality_identities(&code)? {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

fn separability_equivalences() -> Result<Option<String>> {
    for n in 1..=8usize {
        for beta in 0..=n / 2 {
            let alpha = n - 2 * beta;
            for hit in search(alpha, beta, SearchOptions::default())?.hits {
                let preds = separability_predicates(&hit.code);
                let ok = preds.iter().all(|&p| p == preds[0])
                    && weight_congruences_hold(&hit.code)
                    && binary_kernel_self_dual(&hit.code);
                if !ok {
                    return Ok(Some(format!("fails on {:?}", hit.generators.rows())));
                }
            }
        }
    }
    Ok(None)
}

/// The class variants of the existence table.
pub const LADDER_COLUMNS: [(SelfDualClass, Option<bool>); 4] = [
    (SelfDualClass::Type0, None),
    (SelfDualClass::TypeI, Some(true)),
    (SelfDualClass::TypeI, Some(false)),
    (SelfDualClass::TypeII, None),
];

fn existence_ladder() -> Result<Option<String>> {
    for (cls, sep) in LADDER_COLUMNS {
        for alpha in 1..=12 {
            for beta in 1..=8 {
                if !admissible(&AdmissibilityQuery::new(alpha, beta, cls, sep))? {
                    continue;
                }
                let c = ladder_build(alpha, beta, cls, sep)?;
                if classify(&c) != cls || sep.is_some_and(|s| s != c.is_separable()) {
                    return Ok(Some(format!("ladder ({alpha}, {beta}) {cls}")));
                }
            }
        }
    }
    Ok(None)
}

fn constructions() -> Result<Option<String>> {
    let c1 = catalog("C1")?.code;
    let (a, b) = non_type0_neighbors(&c1)?;
    let via_s = neighbor(&c1, &"11|22".parse()?)?;
    let c = crate::construct::direct_product(&catalog("C2")?.code, &catalog("Gdoubleprime")?.code)?;
    let v = neighbor_vector(&c, Some(true))?;
    let odd = match v {
        Some(v) => classify(&neighbor(&c, &v)?) == SelfDualClass::Type0,
        None => false,
    };
    let glued = glue(&c1, &c1)?;
    Ok(first_failure([
        ensure(
            [&a, &via_s]
                .iter()
                .all(|x| is_self_dual(x) && classify(x) != SelfDualClass::Type0)
                && a.same_set(&via_s),
            || "the neighbor through s is not an even self-dual code".into(),
        ),
        ensure(is_self_dual(&b), || "the neighbor through s + t is not self-dual".into()),
        ensure(odd, || "odd-weight neighbor is not Type 0".into()),
        ensure(brute_force_dual(&glued.code)?.same_set(&glued.code), || {
            "glued code is not self-dual".into()
        }),
    ]))
}

fn enumerator_algebra() -> Result<Option<String>> {
    let mut codes: Vec<AdditiveCode> = CATALOG_NAMES
        .iter()
        .map(|n| catalog(n).map(|e| e.code))
        .collect::<Result<_>>()?;
    codes.push(ladder_build(4, 3, SelfDualClass::Type0, None)?);
    codes.push(ladder_build(6, 2, SelfDualClass::Type0, None)?);
    for c in &codes {
        let cls = classify(c);
        let w = WeightEnumerator::of_code(c);
        if w.macwilliams(c.len() as u64)? != w {
            return Ok(Some("MacWilliams fixed point fails".into()));
        }
        if cls == SelfDualClass::Type0 {
            let direct = WeightEnumerator::of_words(w.degree(), &shadow(c)?);
            if direct != w.shadow()? {
                return Ok(Some("shadow enumerator disagrees with the shadow set".into()));
            }
            if orthogonality_table(&decompose(c)?)? != ORTHOGONALITY_TABLE {
                return Ok(Some("orthogonality table differs".into()));
            }
        }
        let d = gleason_decompose(&w, cls)?;
        if d.reconstruct()? != w {
            return Ok(Some("Gleason expansion does not reconstruct".into()));
        }
        let stricter = match cls {
            SelfDualClass::Type0 => Some(SelfDualClass::TypeI),
            SelfDualClass::TypeI => Some(SelfDualClass::TypeII),
            _ => None,
        };
        if let Some(s) = stricter {
            if gleason_decompose(&w, s).is_ok() {
                return Ok(Some(format!("{cls} enumerator expands in the {s} ring")));
            }
        }
    }
    Ok(None)
}

fn minimality() -> Result<Option<String>> {
    let none = |alpha, beta, cls| -> Result<Option<String>> {
        let hits = search(
            alpha,
            beta,
            SearchOptions {
                cls: Some(cls),
                ..SearchOptions::default()
            },
        )?;
        let wanted_nonsep = cls == SelfDualClass::TypeI;
        let count = hits
            .hits
            .iter()
            .filter(|h| !wanted_nonsep || !h.code.is_separable())
            .count();
        Ok(ensure(count == 0, || format!("found a {cls} code on ({alpha}, {beta})")))
    };
    let mut out = vec![none(2, 1, SelfDualClass::Type0)?];
    for beta in 1..=4 {
        out.push(none(2, beta, SelfDualClass::TypeI)?);
    }
    for alpha in (2..=8).step_by(2) {
        for beta in 1..=(10 - alpha) / 2 {
            out.push(none(alpha, beta, SelfDualClass::TypeII)?);
        }
    }
    Ok(first_failure(out))
}

/// Runs every built-in check, in order.
pub fn run_all() -> Vec<Check> {
    vec![
        check("code C1", c1()),
        check("even subcode and shadow of C1", c1_even_subcode_and_shadow()),
        check("code C2", c2()),
        check("codes C3 and C4", c3_and_c4()),
        check("code C5", c5()),
        check("code C6", c6()),
        check("dual construction matches the oracle", oracle_equivalence()),
        check("separability equivalences on searched codes", separability_equivalences()),
        check("existence ladder", existence_ladder()),
        check("neighbor and gluing constructions", constructions()),
        check("weight enumerator algebra", enumerator_algebra()),
        check("no codes below the minimal lengths", minimality()),
    ]
}
