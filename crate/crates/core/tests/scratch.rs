use genfiber_core::field::PrimeField;
use genfiber_core::fglm::fglm;
use genfiber_core::groebner::buchberger;
use genfiber_core::monomial::{Monomial, MonomialOrder, VarSet};
use genfiber_core::poly::Poly;

// ring [x1, x2, x3, z], z last
fn cyclic4_shifted(k: &PrimeField) -> Vec<Poly> {
    let n = 4;
    let x1 = || Monomial::var(0, n);
    let x2 = || Monomial::var(1, n);
    let x3 = || Monomial::var(2, n);
    let z = || Monomial::var(3, n);
    let one = || Monomial::one(n);
    let ord = MonomialOrder::Drl;
    let p = |pairs: Vec<(Monomial, u64)>| {
        Poly::from_pairs(pairs.into_iter().map(|(m, c)| (m, k.elem(c))), ord.clone(), k)
    };
    // w := z + 8
    // g1 = w + x1 + x2 + x3
    let g1 = p(vec![(z(), 1), (one(), 8), (x1(), 1), (x2(), 1), (x3(), 1)]);
    // g2 = w*x1 + x1*x2 + x2*x3 + x3*w
    let g2 = p(vec![
        (z().mul(&x1()), 1), (x1(), 8),
        (x1().mul(&x2()), 1),
        (x2().mul(&x3()), 1),
        (x3().mul(&z()), 1), (x3(), 8),
    ]);
    // g3 = w*x1*x2 + x1*x2*x3 + x2*x3*w + x3*w*x1
    let g3 = p(vec![
        (z().mul(&x1()).mul(&x2()), 1), (x1().mul(&x2()), 8),
        (x1().mul(&x2()).mul(&x3()), 1),
        (x2().mul(&x3()).mul(&z()), 1), (x2().mul(&x3()), 8),
        (x3().mul(&x1()).mul(&z()), 1), (x3().mul(&x1()), 8),
    ]);
    // g4 = w*x1*x2*x3 - 1
    let g4 = p(vec![
        (z().mul(&x1()).mul(&x2()).mul(&x3()), 1),
        (x1().mul(&x2()).mul(&x3()), 8),
        (one(), 10),
    ]);
    vec![g1, g2, g3, g4]
}

#[test]
fn explore() {
    let k = PrimeField::new(11).unwrap();
    let vars = VarSet::split(vec!["x1".into(), "x2".into(), "x3".into(), "z".into()], 3);
    let gens = cyclic4_shifted(&k);
    let drl = buchberger(&gens, &MonomialOrder::Drl, &k);
    println!("DRL basis leading monomials:");
    for g in drl.generators() {
        println!("  lm = {:?}  ({} terms)", g.leading_monomial().unwrap(), g.terms().len());
    }
    println!("zero-dim: {}", drl.is_zero_dimensional());
    println!("MIS: {:?}", drl.max_independent_set().unwrap());

    // I_1 = I + <z>
    let mut gens1 = gens.clone();
    gens1.push(Poly::monomial(Monomial::var(3, 4), genfiber_core::field::Fp::ONE, MonomialOrder::Drl));
    let h1 = buchberger(&gens1, &MonomialOrder::Drl, &k);
    println!("H_1:");
    for g in h1.generators() {
        println!("  {}", g.format(&vars));
    }
    let s1 = h1.staircase(&k).unwrap();
    println!("S_1 (drl) = {:?}", s1.monomials());

    // fglm to lex-on-x
    let target = MonomialOrder::block(3, MonomialOrder::Lex, MonomialOrder::Drl);
    let (g1b, st) = fglm(&h1, target, &k).unwrap();
    println!("G_1 (lex):");
    for g in g1b.generators() {
        println!("  {}", g.format(&vars));
    }
    println!("S_target = {:?}", st.monomials());

    // I_z = I + <z^2>
    let mut gensz = gens.clone();
    let z2 = {
        let mut e = vec![0u32; 4];
        e[3] = 2;
        Monomial::from_exps(e)
    };
    gensz.push(Poly::monomial(z2, genfiber_core::field::Fp::ONE, MonomialOrder::Drl));
    let hz = buchberger(&gensz, &MonomialOrder::Drl, &k);
    println!("H_z:");
    for g in hz.generators() {
        println!("  {}", g.format(&vars));
    }
    let sz = hz.staircase(&k).unwrap();
    println!("S_z (drl) = {:?}", sz.monomials());
    for m in sz.monomials() {
        println!("   {}", genfiber_core::monomial::format_monomial(m, &vars));
    }
}

#[test]
fn explore_decl_z_first() {
    let k = PrimeField::new(11).unwrap();
    // declaration order [z, x1, x2, x3]: permute old index i -> new
    let gens: Vec<Poly> = cyclic4_shifted(&k)
        .iter()
        .map(|g| {
            Poly::from_pairs(
                g.terms().iter().map(|t| (t.mono.permute(&[1, 2, 3, 0]), t.coeff)),
                MonomialOrder::Drl,
                &k,
            )
        })
        .collect();
    let drl = buchberger(&gens, &MonomialOrder::Drl, &k);
    println!("decl z-first DRL lms:");
    for g in drl.generators() {
        println!("  lm = {:?}", g.leading_monomial().unwrap());
    }
    println!("MIS: {:?}", drl.max_independent_set().unwrap());
}

#[test]
fn explore_higher_truncations() {
    let k = PrimeField::new(11).unwrap();
    let vars = VarSet::split(vec!["x1".into(), "x2".into(), "x3".into(), "z".into()], 3);
    let gens = cyclic4_shifted(&k);
    for prec in [3u32, 4, 5, 6] {
        let zp = {
            let mut e = vec![0u32; 4];
            e[3] = prec;
            Monomial::from_exps(e)
        };
        let mut gg = gens.clone();
        gg.push(Poly::monomial(zp, genfiber_core::field::Fp::ONE, MonomialOrder::Drl));
        let h = buchberger(&gg, &MonomialOrder::Drl, &k);
        println!("I + <z^{prec}> DRL basis:");
        for g in h.generators() {
            println!("  {}", g.format(&vars));
        }
        let s = h.staircase(&k).unwrap().len();
        println!("  staircase size = {s} (expect {})", 2 * prec);
        // same under block order eliminating x
        let block = MonomialOrder::block(3, MonomialOrder::Drl, MonomialOrder::Drl);
        let hb = buchberger(&gg, &block, &k);
        println!("I + <z^{prec}> BLOCK basis:");
        for g in hb.generators() {
            println!("  {}", g.format(&vars));
        }
        println!("  staircase size = {}", hb.staircase(&k).unwrap().len());
    }
}
