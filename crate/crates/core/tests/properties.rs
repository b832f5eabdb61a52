use kirillov::ddop::{self, ReducedParams};
use kirillov::lattice::{self, BoltzmannWeights, ColorSet, HLabel};
use kirillov::poly::Polynomial;
use kirillov::weyl::{Partition, Permutation};
use kirillov::ybe;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let all = Permutation::all(n);
    all[rng.gen_range(0..all.len())].clone()
}

fn random_lambda(rng: &mut ChaCha8Rng, n: usize) -> Partition {
    let mut parts: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
    parts.sort_by(|a, b| b.cmp(a));
    Partition::new(parts).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn kn_independent_of_reduced_word(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=4);
        let w = random_perm(&mut rng, n);
        let lambda = random_lambda(&mut rng, n);
        let words = w.all_reduced_words();
        let word = &words[rng.gen_range(0..words.len())];
        let p = ReducedParams::symbolic();
        prop_assert_eq!(
            ddop::kirillov_poly_with_word(&w, word, &lambda, &p).unwrap(),
            ddop::kirillov_poly(&w, &lambda, &p).unwrap()
        );
    }

    #[test]
    fn kn_left_recursion(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=4);
        let w = random_perm(&mut rng, n);
        let i = rng.gen_range(1..n);
        let lambda = random_lambda(&mut rng, n);
        let siw = &Permutation::simple(i, n).unwrap() * &w;
        prop_assume!(siw.length() == w.length() + 1);
        let p = ReducedParams::symbolic();
        let kn = ddop::kirillov_poly(&w, &lambda, &p).unwrap();
        prop_assert_eq!(
            ddop::kirillov_poly(&siw, &lambda, &p).unwrap(),
            ddop::apply_t(&p, i, &kn).unwrap()
        );
    }

    #[test]
    fn lattice_matches_operators_under_integer_specialization(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=4);
        let w = random_perm(&mut rng, n);
        let lambda = random_lambda(&mut rng, n);
        let p = ReducedParams::ints(rng.gen_range(-3..=3), rng.gen_range(-3..=3), rng.gen_range(-3..=3));
        let b = lattice::system_for_kn(&w, &lambda).unwrap();
        prop_assert_eq!(
            lattice::partition_function(&b, &BoltzmannWeights::for_lattice(&p, n)),
            ddop::kirillov_poly(&w, &lambda, &p).unwrap()
        );
    }

    #[test]
    fn dual_forms_agree(k in 1usize..16, m_raw in 0usize..16) {
        let m = m_raw % k;
        let x = Polynomial::x(1, 1);
        prop_assert_eq!(lattice::dagger(k, &x), lattice::dagger_alt(k, &x));
        prop_assert_eq!(lattice::ddagger(k, m, 1), lattice::ddagger_alt(k, m, 1));
    }

    #[test]
    fn rtt_on_random_wide_boundaries(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let nc = 8;
        let params = ReducedParams::symbolic();
        let (xi, xj) = (Polynomial::x(4, 1), Polynomial::x(4, 2));
        let t = BoltzmannWeights::new(&params, nc, vec![xi.clone(), xj.clone()]).unwrap();
        let r = ybe::RWeightTable::new(&params, &xi, &xj);
        let mut label = || match rng.gen_range(0..=nc as u8) {
            0 => HLabel::Plus,
            c => HLabel::Color(c),
        };
        let (a, b, c, d) = (label(), label(), label(), label());
        let sigma = ColorSet::from_colors((1..=nc as u8).filter(|_| rng.gen_bool(0.6)));
        let (lhs, rhs) = ybe::rtt_sides(&t, &r, (a, b, sigma, c, d));
        prop_assert_eq!(&lhs, &rhs);
        if sigma.len() >= 4 {
            let generic = ybe::generic_sides_at((a, b, sigma, c, d)).unwrap();
            prop_assert_eq!((lhs, rhs), generic);
        }
    }

    #[test]
    fn train_quotient_is_exact(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=4);
        let i = rng.gen_range(1..n);
        let f = Polynomial::random(n, &mut rng, 4, 6, true);
        let (q, rem) = ybe::train_quotient(i, &f).unwrap();
        prop_assert!(rem.is_zero());
        prop_assert_eq!(q, ddop::apply_t(&ReducedParams::symbolic(), i, &f).unwrap());
    }
}

#[test]
fn seed_enumeration_uses_vertex_weights() {
    let report = kirillov::acceptance::seed_check(40, 7);
    assert!(report.explained());
    assert!(report.instances.iter().all(|i| i.per_vertex_matches));
}
