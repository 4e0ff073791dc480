use std::collections::HashSet;

use dbhom::homo::{
    count_property_d, latin_power, latin_square_count, lift_cycle_decomposition, lift_sequence, seed_map, Kernel,
};
use dbhom::oracle::{all_tables, binary_normal_form_tables, enumerate_de_bruijn, enumerate_vertex_disjoint_cycles};
use dbhom::{Alphabet, Cycle, Symbol};
use num_bigint::BigUint;
use proptest::prelude::*;

fn words(alphabet: Alphabet, len: usize) -> impl Iterator<Item = Vec<Symbol>> {
    (0..alphabet.pow(len).unwrap()).map(move |c| alphabet.decode(c, len))
}

fn sample_kernels() -> Vec<Kernel> {
    let q3 = Alphabet::new(3).unwrap();
    let q4 = Alphabet::new(4).unwrap();
    vec![
        Kernel::lempel(),
        Kernel::d1(),
        Kernel::d2(),
        Kernel::trimming(Alphabet::binary(), 2).unwrap(),
        Kernel::linear(q3, 2).unwrap(),
        Kernel::linear(q4, 3).unwrap(),
        Kernel::from_fn(q3, 2, |x| q3.add(q3.add(x[0], q3.mul(x[1], x[1])), q3.mul(2, x[2]))).unwrap(),
        Kernel::from_fn(Alphabet::binary(), 3, |x| x[0] ^ (x[1] & x[2]) ^ x[3]).unwrap(),
    ]
}

#[test]
fn homomorphism_law_on_every_edge() {
    for kernel in sample_kernels() {
        let a = kernel.alphabet();
        for n in 1..=3 {
            let big = n + kernel.k();
            if a.pow(big + 1).unwrap() > 100_000 {
                continue;
            }
            // an edge of B_{n+k} is a word of length n+k+1
            for edge in words(a, big + 1) {
                let from = kernel.apply(&edge[..big]).unwrap();
                let to = kernel.apply(&edge[1..]).unwrap();
                assert_eq!(from[1..], to[..n - 1]);
                assert_eq!(kernel.apply(&edge).unwrap()[..], [&from[..], &to[n - 1..]].concat()[..]);
            }
        }
    }
}

#[test]
fn property_d_examples() {
    let b = Alphabet::binary();
    let x1_plus_x2 = Kernel::from_fn(b, 2, |x| x[0] ^ x[1]).unwrap();
    assert!(!x1_plus_x2.is_property_d());
    let zero_preimage: Vec<Vec<Symbol>> = words(b, 3).filter(|w| x1_plus_x2.apply(w).unwrap()[..] == [0]).collect();
    assert_eq!(zero_preimage, vec![vec![0, 0, 0], vec![0, 0, 1], vec![1, 1, 0], vec![1, 1, 1]]);

    assert!(Kernel::d1().is_property_d());
    // preimage of the edge (0;0) under x1 + x3
    let edges: Vec<Vec<Symbol>> = words(b, 4).filter(|w| Kernel::d1().apply(w).unwrap()[..] == [0, 0]).collect();
    assert_eq!(edges, vec![vec![0, 0, 0, 0], vec![0, 1, 0, 1], vec![1, 0, 1, 0], vec![1, 1, 1, 1]]);
    for k in 1..=3 {
        assert!(!Kernel::trimming(b, k).unwrap().is_property_d());
    }
}

#[test]
fn d1_is_the_d_morphism_applied_twice() {
    let b = Alphabet::binary();
    for len in 3..=8 {
        for w in words(b, len) {
            let twice = Kernel::lempel().apply(&Kernel::lempel().apply(&w).unwrap()).unwrap();
            assert_eq!(Kernel::d1().apply(&w).unwrap(), twice);
        }
    }
}

#[test]
fn linear_kernels_are_translation_invariant() {
    for q in [2u32, 3, 4, 5, 6, 7] {
        let a = Alphabet::new(q).unwrap();
        for beta in a.units() {
            let kernel = Kernel::linear(a, beta).unwrap();
            for w in words(a, 3) {
                for lambda in a.symbols() {
                    let shifted: Vec<Symbol> = w.iter().map(|&s| a.add(s, lambda)).collect();
                    assert_eq!(kernel.apply(&shifted).unwrap(), kernel.apply(&w).unwrap());
                }
            }
        }
    }
}

#[test]
fn binary_latin_kernels_are_exactly_the_normal_forms() {
    let b = Alphabet::binary();
    for k in 1..=3 {
        let latin: HashSet<Vec<Symbol>> = all_tables(b, k)
            .unwrap()
            .filter(|t| Kernel::from_table(b, k, t.clone()).unwrap().is_property_d())
            .collect();
        let forms: HashSet<Vec<Symbol>> = binary_normal_form_tables(k).unwrap().into_iter().collect();
        assert_eq!(latin, forms, "k = {k}");
    }
}

#[test]
fn count_law_uses_exponent_q_to_the_k_minus_one() {
    let cases = [(2u32, 1usize, 2u32), (2, 2, 4), (2, 3, 16), (3, 1, 12)];
    for (q, k, want) in cases {
        let a = Alphabet::new(q).unwrap();
        let count = count_property_d(a, k).unwrap();
        assert_eq!(count, BigUint::from(want));
        assert_eq!(count, latin_power(a, (q as u64).pow(k as u32 - 1)).unwrap());
        if k >= 2 {
            // A_q^(q^(k-2)) undercounts
            assert_ne!(count, latin_power(a, (q as u64).pow(k as u32 - 2)).unwrap());
        }
    }
    assert_eq!(latin_square_count(4).unwrap(), 576);
}

#[test]
fn seed_maps_are_permutations() {
    for kernel in sample_kernels().into_iter().filter(Kernel::is_property_d) {
        let a = kernel.alphabet();
        for n in 1..=2 {
            for base in enumerate_vertex_disjoint_cycles(a, n, 6).unwrap() {
                let map = seed_map(&kernel, &base, n).unwrap();
                assert!(map.is_permutation());
            }
        }
    }
}

#[test]
fn lempel_seed_map_is_identity_on_de_bruijn_cycles() {
    for n in 2..=4 {
        for b in enumerate_de_bruijn(Alphabet::binary(), n).unwrap() {
            assert!(seed_map(&Kernel::lempel(), &b, n).unwrap().is_identity());
        }
    }
    // [01] has odd weight, so its preimage is a single self-dual cycle
    let b1 = Cycle::parse(Alphabet::binary(), "01").unwrap();
    let map = seed_map(&Kernel::lempel(), &b1, 1).unwrap();
    assert!(map.fixed_points().is_empty());
}

/// Rotation classes of `B_n(q)` under the cyclic shift: a factor of the digraph.
fn pure_cycling_factor(a: Alphabet, n: usize) -> Vec<Cycle> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for w in words(a, n) {
        if seen.contains(&w) {
            continue;
        }
        let mut period = n;
        for p in 1..=n {
            if n.is_multiple_of(p) && (0..n).all(|i| w[i] == w[i % p]) {
                period = p;
                break;
            }
        }
        let mut r = w.clone();
        for _ in 0..n {
            seen.insert(r.clone());
            r.rotate_left(1);
        }
        out.push(Cycle::new(a, w[..period].to_vec()).unwrap());
    }
    out
}

#[test]
fn lifts_of_a_factor_form_a_factor() {
    let q3 = Alphabet::new(3).unwrap();
    let nonlinear = Kernel::from_fn(q3, 2, |x| q3.add(q3.add(x[0], q3.mul(x[1], x[1])), x[2])).unwrap();
    let cases: Vec<(Kernel, Vec<usize>)> = vec![
        (Kernel::lempel(), vec![1, 2, 3, 4]),
        (Kernel::d1(), vec![1, 2, 3]),
        (Kernel::d2(), vec![1, 2, 3]),
        (Kernel::linear(q3, 1).unwrap(), vec![1, 2]),
        (nonlinear, vec![1, 2]),
    ];
    for (kernel, orders) in cases {
        let a = kernel.alphabet();
        for n in orders {
            let big = n + kernel.k();
            let mut windows = HashSet::new();
            for base in pure_cycling_factor(a, n) {
                for c in lift_cycle_decomposition(&kernel, &base, n).unwrap().cycles() {
                    for w in c.windows(big) {
                        assert!(windows.insert(w), "vertex covered twice");
                    }
                }
            }
            assert_eq!(windows.len(), a.pow(big).unwrap());
        }
    }
}

#[test]
fn linear_lift_weight_law() {
    for q in [3u32, 4, 5, 6] {
        let a = Alphabet::new(q).unwrap();
        let max_len = 12;
        let orders: &[usize] = if q <= 4 { &[1, 2] } else { &[1] };
        for &n in orders {
            for base in enumerate_vertex_disjoint_cycles(a, n, max_len).unwrap() {
                let l = base.len();
                let w = base.weight(a);
                let r = q as usize / dbhom::alphabet::gcd(u64::from(w), u64::from(q)) as usize;
                for beta in a.units() {
                    let kernel = Kernel::linear(a, beta).unwrap();
                    let dec = lift_cycle_decomposition(&kernel, &base, n).unwrap();
                    let step = a.mul(a.inverse(beta).unwrap(), w);
                    for c in dec.cycles() {
                        assert_eq!(c.len(), r * l);
                        let first = &c.symbols()[..l];
                        for t in 1..r {
                            let block: Vec<Symbol> =
                                first.iter().map(|&s| a.add(s, a.mul(step, t as Symbol))).collect();
                            assert_eq!(&c.symbols()[t * l..(t + 1) * l], block.as_slice());
                        }
                    }
                    if w == 0 && base.is_de_bruijn(a, n) {
                        assert!(dec.cycles().iter().all(|c| c.is_primitive(a, n + 1)));
                    }
                }
            }
        }
    }
}

#[test]
fn alternating_string_is_the_lift_of_a_constant_run() {
    for q in [3u32, 5, 7] {
        let a = Alphabet::new(q).unwrap();
        for beta in a.units() {
            let kernel = Kernel::linear(a, beta).unwrap();
            for lambda in a.units() {
                let z = lift_sequence(&kernel, &vec![lambda; q as usize], &[0]).unwrap();
                let step = a.mul(a.inverse(beta).unwrap(), lambda);
                let theta: Vec<Symbol> = (0..=q as Symbol).map(|i| a.mul(i % q as Symbol, step)).collect();
                assert_eq!(z.as_slice(), theta.as_slice());
            }
        }
    }
}

proptest! {
    #[test]
    fn lift_inverts_apply(q in 2u32..6, base in proptest::collection::vec(0u16..64, 1..40), seed in proptest::collection::vec(0u16..64, 2)) {
        let a = Alphabet::new(q).unwrap();
        let kernel = Kernel::from_fn(a, 2, |x| a.add(a.add(x[0], a.mul(x[1], x[1])), x[2])).unwrap();
        let base: Vec<Symbol> = base.into_iter().map(|s| s % q as Symbol).collect();
        let seed: Vec<Symbol> = seed.into_iter().map(|s| s % q as Symbol).collect();
        let z = lift_sequence(&kernel, &base, &seed).unwrap();
        prop_assert_eq!(&z[..2], seed.as_slice());
        prop_assert_eq!(kernel.apply(&z).unwrap().into_vec(), base);
    }
}
