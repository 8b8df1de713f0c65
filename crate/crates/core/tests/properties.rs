use proptest::prelude::*;
use rrlrc::codec::{encode, repair, repair_plan};
use rrlrc::codes::{code_pair, code_single, constacyclic_shift, is_codeword};
use rrlrc::distance::{closed_form_single, locality, min_distance, v_min};
use rrlrc::gf::FieldSpec;
use rrlrc::oracle;
use rrlrc::polyring::{binom_mod_p, binomial_power, v_weight};

fn small_field() -> impl Strategy<Value = FieldSpec> {
    prop::sample::select(vec![(2u64, 1u32), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1)])
        .prop_map(|(p, m)| FieldSpec::gf(p, m).unwrap())
}

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 7])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn closed_form_matches_v_minimum(p in prime(), s in 1u32..=4, frac in 0.0f64..1.0) {
        let ps = p.pow(s);
        let i = ((ps as f64) * frac) as u64;
        prop_assert_eq!(closed_form_single(p, s, i), v_min(p, i, ps).map(|x| x.0));
    }

    #[test]
    fn distance_is_monotone_in_i(p in prime(), s in 1u32..=4) {
        let ps = p.pow(s);
        let ds: Vec<u64> = (0..ps).map(|i| closed_form_single(p, s, i).unwrap()).collect();
        prop_assert!(ds.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn binomial_power_weight_is_v(f in small_field(), t in 0u64..200) {
        let mu = f.elem(f.primitive()).unwrap();
        let poly = binomial_power(2, &mu, t);
        prop_assert_eq!(poly.weight() as u64, v_weight(t, f.p()));
        for j in 0..=t {
            let expected = binom_mod_p(t, j, f.p()) != 0;
            prop_assert_eq!(poly.coeff(2 * j as usize) != 0, expected);
        }
    }

    #[test]
    fn field_axioms(f in small_field(), a in 0u32..64, b in 0u32..64, c in 0u32..64) {
        let q = f.q() as u32;
        let (a, b, c) = (a % q, b % q, c % q);
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
    }

    #[test]
    fn witness_is_minimum_weight_codeword(f in small_field(), s in 1u32..=2, seed in 0u64..1000) {
        let ps = f.p().pow(s);
        let i = seed % ps;
        let lambda0 = 1 + (seed as u32 % (f.q() as u32 - 1));
        let eta = if f.p() == 3 { 2 } else { 3 };
        let code = code_single(&f, eta, s, lambda0, i).unwrap();
        let w = min_distance(&code).unwrap();
        let v = w.witness.to_vector(code.n());
        prop_assert!(is_codeword(&code, &v).unwrap());
        prop_assert_eq!(w.witness.weight() as u64, w.d);
        if rrlrc::linalg::span_size(&f, code.k()) <= 1 << 14 {
            prop_assert_eq!(oracle::exhaustive_min_distance(&code, 1 << 14).unwrap(), w.d);
        }
    }

    #[test]
    fn pair_codes_match_oracle(p in prop::sample::select(vec![3u64, 5, 7]), i in 0u64..7, j in 1u64..8) {
        let f = FieldSpec::gf(p, 1).unwrap();
        let (i, j) = (i % p, 1 + (j - 1) % p);
        prop_assume!(i != j);
        let code = code_pair(&f, 1, 1, i, j).unwrap();
        prop_assert!(oracle::verify_duality(&code));
        if rrlrc::linalg::span_size(&f, code.k()) <= 1 << 14 {
            prop_assert_eq!(oracle::exhaustive_min_distance(&code, 1 << 14).unwrap(), min_distance(&code).unwrap().d);
        }
        if rrlrc::linalg::span_size(&f, code.n() - code.k()) <= 1 << 14 && code.k() > 0 {
            prop_assert_eq!(
                oracle::exhaustive_dual_distance(&code, 1 << 14).unwrap(),
                min_distance(&code.dual()).unwrap().d
            );
        }
    }

    #[test]
    fn codewords_are_shift_invariant(f in small_field(), i in 0u64..4, msg_seed in any::<u64>()) {
        let code = code_single(&f, 1, 2, f.primitive(), i % f.p().pow(2)).unwrap();
        let q = f.q();
        let message: Vec<u32> = (0..code.k()).map(|t| ((msg_seed >> (t % 60)) % q) as u32).collect();
        let c = encode(&code, &message).unwrap();
        let shifted = constacyclic_shift(&c);
        prop_assert!(is_codeword(&code, shifted.coeffs()).unwrap());
    }

    #[test]
    fn repair_round_trip(f in small_field(), s in 1u32..=2, seed in any::<u64>()) {
        let ps = f.p().pow(s);
        let i = 1 + seed % (ps - 1).max(1);
        prop_assume!(i < ps);
        let code = code_single(&f, 1, s, f.minus_one(), i).unwrap();
        let q = f.q();
        let message: Vec<u32> = (0..code.k()).map(|t| ((seed.rotate_left(t as u32 * 7)) % q) as u32).collect();
        let c = encode(&code, &message).unwrap();
        prop_assert_eq!(&c.coeffs()[code.n() - code.k()..], &message[..]);
        let e = (seed % code.n() as u64) as usize;
        let mut received: Vec<Option<u32>> = c.coeffs().iter().copied().map(Some).collect();
        received[e] = None;
        prop_assert_eq!(repair(&code, &received).unwrap(), c);
        let plan = repair_plan(&code, e).unwrap();
        prop_assert_eq!(plan.helper_indices.len() as u64, locality(&code).unwrap().r);
        prop_assert!(!plan.helper_indices.contains(&e));
    }
}

#[test]
fn chain_of_single_root_codes_is_nested() {
    let f = FieldSpec::gf(2, 2).unwrap();
    for i in 0..15u64 {
        let outer = code_single(&f, 3, 4, 2, i).unwrap();
        let inner = code_single(&f, 3, 4, 2, i + 1).unwrap();
        assert!(is_codeword(&outer, &inner.generator().to_vector(48)).unwrap());
    }
}
