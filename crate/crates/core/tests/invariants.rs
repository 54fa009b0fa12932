//! Property tests over randomly generated codes.

use std::sync::OnceLock;

use proptest::prelude::*;

use z2z4::{
    classify, dual, dual_type, gleason_decompose, is_self_dual, parse_code_file, search, span, standard_form,
    write_code_file, AdditiveCode, AmbientParams, GeneratorMatrix, MixedVector, SearchOptions, SelfDualClass,
    WeightEnumerator,
};

fn ambient() -> impl Strategy<Value = (usize, usize)> {
    (0usize..=5, 0usize..=3).prop_filter("non-empty ambient", |(a, b)| a + b > 0)
}

fn vector(alpha: usize, beta: usize) -> impl Strategy<Value = MixedVector> {
    (
        proptest::collection::vec(0u8..2, alpha),
        proptest::collection::vec(0u8..4, beta),
    )
        .prop_map(|(b, q)| MixedVector::from_parts(&b, &q).unwrap())
}

fn code() -> impl Strategy<Value = AdditiveCode> {
    ambient().prop_flat_map(|(alpha, beta)| {
        proptest::collection::vec(vector(alpha, beta), 0..=4).prop_map(move |rows| {
            let gen = GeneratorMatrix::new(AmbientParams::new(alpha, beta).unwrap(), rows).unwrap();
            span(&gen).unwrap()
        })
    })
}

/// Pairs of same-shape vectors.
fn vector_pair() -> impl Strategy<Value = (MixedVector, MixedVector, MixedVector)> {
    ambient().prop_flat_map(|(a, b)| (vector(a, b), vector(a, b), vector(a, b)))
}

fn rotation(n: usize, seed: u64) -> Vec<usize> {
    let k = if n == 0 { 0 } else { (seed as usize) % n };
    (0..n).map(|i| (i + k) % n).collect()
}

/// Every self-dual code of length at most 8 found by exhaustive search.
fn self_dual_code() -> impl Strategy<Value = AdditiveCode> {
    static POOL: OnceLock<Vec<AdditiveCode>> = OnceLock::new();
    let pool = POOL.get_or_init(|| {
        let mut out = Vec::new();
        for n in 1..=8usize {
            for beta in 0..=n / 2 {
                let census = search(n - 2 * beta, beta, SearchOptions::default()).unwrap();
                out.extend(census.hits.into_iter().map(|h| h.code));
            }
        }
        out
    });
    proptest::sample::select(pool.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn inner_product_is_symmetric_and_bilinear((u, v, w) in vector_pair()) {
        let uv = u.inner_product(&v).unwrap();
        prop_assert_eq!(uv, v.inner_product(&u).unwrap());
        let sum = u.inner_product(&(v + w)).unwrap();
        prop_assert_eq!(sum, (uv + u.inner_product(&w).unwrap()) % 4);
    }

    #[test]
    fn gray_image_has_length_n_and_weight_equals_lee_weight((u, v, _w) in vector_pair()) {
        let g = u.gray_map();
        prop_assert_eq!(g.len(), u.alpha() + 2 * u.beta());
        prop_assert_eq!(g.iter().filter(|&&b| b == 1).count(), u.weight());
        prop_assert_eq!(u.distance(&v).unwrap(), (u - v).weight());
    }

    #[test]
    fn dual_is_an_involution_with_complementary_size(c in code()) {
        let d = dual(&c).unwrap();
        prop_assert_eq!(c.len() * d.len(), 1usize << c.ambient().length());
        prop_assert!(dual(&d).unwrap().same_set(&c));
        prop_assert!(d.codewords().iter().all(|v| c.codewords().iter().all(|u| u.inner_product(v).unwrap() == 0)));
    }

    #[test]
    fn dual_type_matches_the_dual_code(c in code()) {
        let d = dual(&c).unwrap();
        prop_assert_eq!(dual_type(&c.type_params()).unwrap(), d.type_params());
    }

    #[test]
    fn size_is_determined_by_type(c in code()) {
        let p = c.type_params();
        prop_assert_eq!(c.len(), 1usize << (p.gamma + 2 * p.delta));
        prop_assert!(p.kappa <= p.gamma.min(p.alpha));
    }

    #[test]
    fn standard_form_spans_the_same_code(c in code()) {
        let sf = standard_form(c.generators());
        prop_assert_eq!(sf.type_params(), c.type_params());
        let rows: Vec<MixedVector> = sf.rows().iter().map(|v| sf.to_original(v)).collect();
        let back = span(&GeneratorMatrix::new(c.ambient(), rows).unwrap()).unwrap();
        prop_assert!(back.same_set(&c));
    }

    #[test]
    fn macwilliams_transform_gives_the_dual_enumerator(c in code()) {
        let w = WeightEnumerator::of_code(&c);
        let dual_w = WeightEnumerator::of_code(&dual(&c).unwrap());
        prop_assert_eq!(w.macwilliams(c.len() as u64).unwrap(), dual_w);
    }

    #[test]
    fn even_weight_subcode_has_index_one_or_two(c in code()) {
        let even = c.even_weight_subcode();
        let w = WeightEnumerator::of_code(&c).even_subcode();
        prop_assert_eq!(WeightEnumerator::of_code(&even), w);
        let odd = c.codewords().iter().any(|v| v.weight() % 2 == 1);
        prop_assert_eq!(even.len() * if odd { 2 } else { 1 }, c.len());
    }

    #[test]
    fn permutations_preserve_class_and_enumerator(c in code(), seed in any::<u64>()) {
        let a = c.ambient();
        let p = c.permuted(&rotation(a.alpha(), seed), &rotation(a.beta(), seed / 7));
        prop_assert_eq!(classify(&p), classify(&c));
        prop_assert_eq!(WeightEnumerator::of_code(&p), WeightEnumerator::of_code(&c));
        prop_assert_eq!(p.type_params(), c.type_params());
    }

    #[test]
    fn code_files_round_trip(c in code()) {
        let text = write_code_file(c.generators());
        let parsed = parse_code_file(&text).unwrap();
        prop_assert!(span(&parsed).unwrap().same_set(&c));
    }

    #[test]
    fn self_dual_enumerators_lie_in_their_gleason_ring(c in self_dual_code(), seed in any::<u64>()) {
        let a = c.ambient();
        let c = c.permuted(&rotation(a.alpha(), seed), &rotation(a.beta(), seed / 7));
        let cls = classify(&c);
        prop_assert!(cls != SelfDualClass::NotSelfDual);
        prop_assert!(is_self_dual(&c));
        let w = WeightEnumerator::of_code(&c);
        let g = gleason_decompose(&w, cls).unwrap();
        prop_assert_eq!(g.reconstruct().unwrap(), w);
    }
}
