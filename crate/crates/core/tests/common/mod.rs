#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use zetafix::algebra::{rat, Rational, RationalMatrix};
use zetafix::manifold::{AffineMapSpec, ManifoldSpec};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Every signed permutation matrix of size `dim`.
pub fn signed_permutations(dim: usize) -> Vec<RationalMatrix> {
    let mut out = Vec::new();
    for p in permutations(dim) {
        for signs in 0..(1u32 << dim) {
            let mut m = RationalMatrix::zero(dim);
            for (i, &j) in p.iter().enumerate() {
                let s = if signs >> i & 1 == 1 { -1 } else { 1 };
                m.set(i, j, rat(s));
            }
            out.push(m);
        }
    }
    out
}

pub fn closure(gens: &[RationalMatrix], dim: usize, cap: usize) -> Option<Vec<RationalMatrix>> {
    let mut group = vec![RationalMatrix::identity(dim)];
    let mut frontier = group.clone();
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = &x * g;
            if !group.contains(&y) {
                if group.len() == cap {
                    return None;
                }
                group.push(y.clone());
                frontier.push(y);
            }
        }
    }
    Some(group)
}

pub fn to_spec(name: &str, group: &[RationalMatrix]) -> ManifoldSpec {
    let elements = group
        .iter()
        .enumerate()
        .map(|(i, m)| (if m.is_identity() { "I".to_string() } else { format!("A{i}") }, m.clone()))
        .collect();
    ManifoldSpec::new(name, group[0].dim(), elements).expect("closure is a group")
}

/// Holonomy generated by up to two random signed permutations, of order at most 4.
pub fn random_holonomy(rng: &mut ChaCha8Rng, dim: usize) -> Vec<RationalMatrix> {
    let all = signed_permutations(dim);
    loop {
        let k = rng.gen_range(0..=2);
        let gens: Vec<RationalMatrix> = (0..k).map(|_| all.choose(rng).unwrap().clone()).collect();
        if let Some(g) = closure(&gens, dim, 4) {
            return g;
        }
    }
}

fn conjugate_into(b: &RationalMatrix, group: &[RationalMatrix]) -> bool {
    let inv = b.inverse().unwrap();
    group.iter().all(|a| group.contains(&(&(b * a) * &inv)))
}

fn integer_content(m: &RationalMatrix) -> Rational {
    let mut g = num::BigInt::from(0);
    for x in m.entries() {
        g = num::Integer::gcd(&g, x.numer());
    }
    Rational::from_integer(g)
}

/// `D = B C` where `C` is an integer matrix commuting with the group and `B` is a
/// signed permutation normalizing it, so that every `A D = D A'` with `A' ∈ Φ`.
pub fn random_normalizing_map(rng: &mut ChaCha8Rng, group: &[RationalMatrix]) -> RationalMatrix {
    let dim = group[0].dim();
    let normalizers: Vec<RationalMatrix> = signed_permutations(dim)
        .into_iter()
        .filter(|b| conjugate_into(b, group))
        .collect();
    loop {
        let mut x = RationalMatrix::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                x.set(i, j, rat(rng.gen_range(-3..=3)));
            }
        }
        let mut c = RationalMatrix::zero(dim);
        for a in group {
            c = &c + &(&(a * &x) * &a.inverse().unwrap());
        }
        let content = integer_content(&c);
        if content != rat(0) {
            let k = rat(rng.gen_range(1..=3));
            c = c.scale(&(k / content));
        }
        if c.entries().iter().any(|e| e.numer().magnitude() > &num::BigUint::from(3u8)) {
            continue;
        }
        let b = normalizers.choose(rng).unwrap();
        return b * &c;
    }
}

pub struct Instance {
    pub spec: ManifoldSpec,
    pub map: AffineMapSpec,
}

/// Random manifold of dimension at most 3 with `|Φ| ≤ 4` and a compatible map.
pub fn random_instance(rng: &mut ChaCha8Rng, index: usize) -> Instance {
    let dim = rng.gen_range(1..=3);
    let group = random_holonomy(rng, dim);
    let d = random_normalizing_map(rng, &group);
    Instance {
        spec: to_spec(&format!("random_{index}"), &group),
        map: AffineMapSpec::new("f", d),
    }
}

pub fn random_integer_matrix(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> RationalMatrix {
    let mut m = RationalMatrix::zero(dim);
    for i in 0..dim {
        for j in 0..dim {
            m.set(i, j, rat(rng.gen_range(-bound..=bound)));
        }
    }
    m
}

fn block_diagonal(blocks: &[RationalMatrix]) -> RationalMatrix {
    let dim: usize = blocks.iter().map(|b| b.dim()).sum();
    let mut m = RationalMatrix::zero(dim);
    let mut off = 0;
    for b in blocks {
        for i in 0..b.dim() {
            for j in 0..b.dim() {
                m.set(off + i, off + j, b.get(i, j).clone());
            }
        }
        off += b.dim();
    }
    m
}

/// Integer rotation blocks of order 3, 4 and 6.
pub fn rotation_block(order: usize) -> RationalMatrix {
    match order {
        3 => RationalMatrix::from_ints([[0, -1], [1, -1]]),
        4 => RationalMatrix::from_ints([[0, -1], [1, 0]]),
        6 => RationalMatrix::from_ints([[1, -1], [1, 0]]),
        _ => panic!("no integer rotation of order {order}"),
    }
}

pub struct CyclicInstance {
    pub spec: ManifoldSpec,
    pub f: AffineMapSpec,
    pub g: AffineMapSpec,
}

/// Orientable manifold with cyclic holonomy `⟨I_a ⊕ -I_b ⊕ R⟩` (`b` even), and two
/// maps respecting the splitting, optionally conjugated by a unimodular matrix.
pub fn random_cyclic_instance(rng: &mut ChaCha8Rng, index: usize) -> CyclicInstance {
    let a = rng.gen_range(0..=2);
    let b = [0, 2, 2][rng.gen_range(0..3)];
    let rot: Option<usize> = [None, Some(3), Some(4), Some(6)][rng.gen_range(0..4)];
    let (a, b) = if a + b == 0 && rot.is_none() { (1, 2) } else { (a, b) };

    let mut gen_blocks = Vec::new();
    if a > 0 {
        gen_blocks.push(RationalMatrix::identity(a));
    }
    if b > 0 {
        gen_blocks.push(RationalMatrix::identity(b).scale(&rat(-1)));
    }
    if let Some(k) = rot {
        gen_blocks.push(rotation_block(k));
    }
    let generator = block_diagonal(&gen_blocks);
    let dim = generator.dim();

    let random_map = |rng: &mut ChaCha8Rng| {
        let mut blocks = Vec::new();
        if a > 0 {
            blocks.push(random_integer_matrix(rng, a, 3));
        }
        if b > 0 {
            blocks.push(random_integer_matrix(rng, b, 3));
        }
        if let Some(k) = rot {
            let r = rotation_block(k);
            let x = rat(rng.gen_range(-3..=3));
            let y = rat(rng.gen_range(-3..=3));
            blocks.push(&RationalMatrix::identity(2).scale(&x) + &r.scale(&y));
        }
        block_diagonal(&blocks)
    };
    let mut d_f = random_map(rng);
    let mut d_g = random_map(rng);

    let mut group = closure(&[generator], dim, 64).expect("finite order");
    if rng.gen_bool(0.5) {
        let p = random_unimodular(rng, dim);
        let conj = |m: &RationalMatrix| m.conjugate_by(&p).unwrap();
        group = group.iter().map(conj).collect();
        d_f = conj(&d_f);
        d_g = conj(&d_g);
    }
    CyclicInstance {
        spec: to_spec(&format!("cyclic_{index}"), &group),
        f: AffineMapSpec::new("f", d_f),
        g: AffineMapSpec::new("g", d_g),
    }
}

/// Product of a few elementary integer matrices.
pub fn random_unimodular(rng: &mut ChaCha8Rng, dim: usize) -> RationalMatrix {
    let mut p = RationalMatrix::identity(dim);
    if dim < 2 {
        return p;
    }
    for _ in 0..3 {
        let i = rng.gen_range(0..dim);
        let mut j = rng.gen_range(0..dim);
        while j == i {
            j = rng.gen_range(0..dim);
        }
        let mut e = RationalMatrix::identity(dim);
        e.set(i, j, rat(rng.gen_range(-1..=1)));
        p = &p * &e;
    }
    p
}
