//! Property suites over random instances.
//!
//! Every property runs on one [`Instance`] with its own seeded generator and
//! returns a [`Tally`]: how many cases were checked, how many did not meet
//! the property's hypothesis, and a description of each failure.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classes::{
    dixmier_constancy_check, modules_equivalent, product_class_check, r_class, spec_induced_member,
    spec_induced_member_affine, spec_induced_space, spec_restrict_member, spec_restrict_member_affine,
    spec_restrict_space, spec_tensor_member, spec_tensor_member_diagonal, spec_tensor_space,
};
use crate::error::{Error, Result};
use crate::exact::{int, kernel, rat, rref, vector, AffineSubspace, Rational, Subspace, Vector};
use crate::lie::{diagonal_embedding, format_linear, FilteredAlgebra, Subalgebra};
use crate::pbw::{
    bounded_submodule, highest_vectors, module_filtration_slice, normal_order, power_line, t_degree,
    AdaptedBasis, InducedModule, ModuleElement, Monomial, Slice, TDegree, UeaElement,
};
use crate::polar::{
    relative_stabilizer, stabilizer, theta, vergne_polarization, Functional,
};
use crate::problem::{parse, ProblemFile};
use crate::random::{
    generate, random_functional, random_int_vector, random_matrix, random_module_element, random_rational_vector,
    random_subalgebra, small_rational, Family, RandomSpec,
};

#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub max_dim: usize,
    /// Module properties run only up to this dimension.
    pub max_module_dim: usize,
    pub degree: u32,
    pub samples: usize,
    pub triples: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            max_dim: 6,
            max_module_dim: 5,
            degree: 4,
            samples: 20,
            triples: 50,
        }
    }
}

/// One generated algebra with a random functional.
#[derive(Clone, Debug)]
pub struct Instance {
    pub index: usize,
    pub seed: u64,
    pub family: Family,
    pub twisted: bool,
    pub algebra: FilteredAlgebra,
    pub functional: Functional,
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

fn name_hash(name: &str) -> u64 {
    name.bytes()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

/// Instance `index` of the run with master seed `seed`: every third instance
/// is an upper-triangular algebra, the rest iterated extensions; odd indices
/// get a random change of basis.
pub fn instance(seed: u64, index: usize, config: &CheckConfig) -> Result<Instance> {
    let sub_seed = splitmix(seed ^ splitmix(index as u64));
    let family = if index % 3 == 0 {
        Family::UpperTriangular
    } else {
        Family::Extension
    };
    let twisted = index % 2 == 1;
    let spec = RandomSpec::new(sub_seed, family, 1, config.max_dim).twisted(twisted);
    let algebra = generate(&spec)?;
    let mut rng = ChaCha8Rng::seed_from_u64(splitmix(sub_seed));
    let functional = random_functional(&mut rng, algebra.dim());
    Ok(Instance {
        index,
        seed: sub_seed,
        family,
        twisted,
        algebra,
        functional,
    })
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Tally {
    pub checked: usize,
    /// Cases whose hypothesis did not hold.
    pub skipped: usize,
    pub failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    fn skip(&mut self) {
        self.skipped += 1;
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(&mut self, other: &Tally) {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.failures.extend(other.failures.iter().cloned());
    }
}

type PropertyFn = fn(&Instance, &mut ChaCha8Rng, &CheckConfig, &mut Tally) -> Result<()>;

pub struct Property {
    pub name: &'static str,
    pub description: &'static str,
    run: PropertyFn,
}

impl Property {
    pub fn run(&self, inst: &Instance, config: &CheckConfig) -> Tally {
        let mut rng = ChaCha8Rng::seed_from_u64(inst.seed ^ name_hash(self.name));
        let mut tally = Tally::default();
        if let Err(e) = (self.run)(inst, &mut rng, config, &mut tally) {
            tally.failures.push(format!("error: {e}"));
        }
        tally
    }
}

macro_rules! property {
    ($name:literal, $desc:literal, $f:ident) => {
        Property {
            name: $name,
            description: $desc,
            run: $f,
        }
    };
}

pub const PROPERTIES: &[Property] = &[
    property!("exact.rref_idempotent", "rref(rref(m)) = rref(m)", rref_idempotent),
    property!("exact.kernel_rank", "dim ker m + rank m = columns", kernel_rank),
    property!("exact.annihilator_involution", "Ann(Ann(a)) = a", annihilator_involution),
    property!("exact.affine_containment", "containment agrees with sampled points", affine_containment),
    property!("lie.filtration_ideals", "[g, g_i] lies in g_i", filtration_ideals),
    property!("lie.derived_series", "derived series reaches 0 within dim steps", derived_series),
    property!("lie.induced_filtration", "induced filtrations validate", induced_filtration),
    property!("lie.product", "g x g and the diagonal validate", product_valid),
    property!("polar.vergne_polarization", "pv(f) is a polarization", vergne_is_polarization),
    property!("polar.compatibility", "pv(f) meets g_i in pv_i(f_i)", compatibility),
    property!("polar.stabilizer_extension", "g^f1 + g1 = g gives g^f + g1 = g for extensions", stabilizer_extension),
    property!("polar.uniqueness", "agreement on pv_1(f_1) fixes pv(f)", uniqueness),
    property!("polar.theta_character", "theta vanishes on [p, p]", theta_character),
    property!("pbw.representation", "act([a,b]) = [act a, act b]", representation),
    property!("pbw.normal_order_associative", "normal ordering is associative and idempotent", normal_order_associative),
    property!("pbw.normal_order_action", "word action equals projected normal form", normal_order_action),
    property!("pbw.cyclic_eigen", "x l = f(x) l on pv(f)", cyclic_eigen),
    property!("pbw.highest_vectors", "(y - c) l = 0 exactly for (v, f(v)), v in pv(f)", highest),
    property!("pbw.cyclic_generates", "l generates every bounded slice", cyclic_generates),
    property!("pbw.slice_exhausted", "U(g1) l exhausts slices when g^f + g1 = g", slice_exhausted),
    property!("pbw.t_filtration", "t-degree factors carry the g1 action when g^f lies in g1", t_filtration),
    property!("pbw.shifted_generator", "U(g)(t - a) l meets K[t] l in (t - a) K[t] l", shifted_generator),
    property!("pbw.t_powers_eigen", "(y - f(y)) t^n l = 0 for y in p1", t_powers_eigen),
    property!("pbw.quotient_codimension", "codim of sum U(g)(x - f(x)) l_h equals the M(f) slice", quotient_codimension),
    property!("classes.equivalence", "module equivalence is an equivalence relation", equivalence),
    property!("classes.membership", "class members are equivalent, perturbed ones are not", membership),
    property!("classes.dimension", "dim R(f) + dim pv(f) = dim g", class_dimension),
    property!("classes.induced", "induction membership: conditions agree with containment", induced_agreement),
    property!("classes.restriction", "restriction membership: conditions agree with containment", restriction_agreement),
    property!("classes.restriction_whole", "restriction to g is module equivalence", restriction_whole),
    property!("classes.tensor", "tensor membership: containment agrees with diagonal conditions", tensor_agreement),
    property!("classes.product", "pv and R of f' x f'' are products", product_classes),
    property!("classes.constancy", "pv, values and twisted character constant on R(f)", constancy),
    property!("format.round_trip", "print/parse round trip of the instance", round_trip),
];

pub fn property(name: &str) -> Option<&'static Property> {
    PROPERTIES.iter().find(|p| p.name == name)
}

#[derive(Clone, Debug)]
pub struct InstanceReport {
    pub index: usize,
    pub seed: u64,
    pub family: Family,
    pub dim: usize,
    pub results: Vec<(&'static str, Tally)>,
}

impl InstanceReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|(_, t)| t.passed())
    }
}

pub fn run_instance(inst: &Instance, properties: &[&Property], config: &CheckConfig) -> InstanceReport {
    InstanceReport {
        index: inst.index,
        seed: inst.seed,
        family: inst.family,
        dim: inst.algebra.dim(),
        results: properties.iter().map(|p| (p.name, p.run(inst, config))).collect(),
    }
}

// ---------------------------------------------------------------- helpers

fn show(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn first_step(fa: &FilteredAlgebra) -> Option<Subspace> {
    fa.filtration().first_proper().map(|(_, s)| s.clone())
}

fn pv(fa: &FilteredAlgebra, f: &Functional) -> Result<Subspace> {
    Ok(vergne_polarization(fa, f)?.space().clone())
}

/// `f` plus a random element of `Ann(s)`.
fn perturb_off(rng: &mut ChaCha8Rng, f: &Functional, s: &Subspace) -> Functional {
    let class = AffineSubspace::new(f.coords().to_vec(), s.annihilator()).expect("same ambient");
    Functional::new(class.sample(rng, 3))
}

fn module_ok(inst: &Instance, config: &CheckConfig) -> bool {
    inst.algebra.dim() <= config.max_module_dim
}

/// A few functionals per instance: the instance's own and random ones.
fn functionals(inst: &Instance, rng: &mut ChaCha8Rng, extra: usize) -> Vec<Functional> {
    let n = inst.algebra.dim();
    let mut out = vec![inst.functional.clone(), Functional::zero(n)];
    out.extend((0..extra).map(|_| random_functional(rng, n)));
    out
}

// ------------------------------------------------------------------ exact

fn rref_idempotent(inst: &Instance, rng: &mut ChaCha8Rng, _: &CheckConfig, t: &mut Tally) -> Result<()> {
    let n = inst.algebra.dim() + 1;
    for _ in 0..5 {
        let (r, c) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
        let m = random_matrix(rng, r, c);
        let r = rref(&m);
        t.check(rref(&r) == r && r.rank() == m.rank(), || format!("rref not idempotent on {m:?}"));
    }
    Ok(())
}

fn kernel_rank(inst: &Instance, rng: &mut ChaCha8Rng, _: &CheckConfig, t: &mut Tally) -> Result<()> {
    let n = inst.algebra.dim() + 1;
    for _ in 0..5 {
        let (r, c) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
        let m = random_matrix(rng, r, c);
        let k = kernel(&m);
        let mut in_kernel = true;
        for v in k.basis_vectors() {
            in_kernel &= vector::is_zero(&m.mul_vec(v)?);
        }
        t.check(in_kernel && k.dim() + m.rank() == m.cols(), || format!("kernel/rank mismatch on {m:?}"));
    }
    Ok(())
}

fn random_subspace(rng: &mut ChaCha8Rng, n: usize) -> Subspace {
    let k = rng.gen_range(0..=n);
    Subspace::span(n, (0..k).map(|_| random_int_vector(rng, n, 2)).collect::<Vec<_>>()).expect("length n")
}

fn annihilator_involution(inst: &Instance, rng: &mut ChaCha8Rng, _: &CheckConfig, t: &mut Tally) -> Result<()> {
    let n = inst.algebra.dim();
    for _ in 0..5 {
        let a = random_subspace(rng, n);
        let ann = a.annihilator();
        t.check(ann.annihilator() == a && a.dim() + ann.dim() == n, || format!("annihilator of {a:?}"));
    }
    Ok(())
}

/// Defining equations `A x = c` of an affine subspace.
fn equations(b: &AffineSubspace) -> Result<Vec<(Vector, Rational)>> {
    b.direction()
        .annihilator()
        .basis_vectors()
        .map(|row| Ok((row.to_vec(), vector::dot(row, b.point()))))
        .collect()
}

fn affine_containment(inst: &Instance, rng: &mut ChaCha8Rng, _: &CheckConfig, t: &mut Tally) -> Result<()> {
    let n = inst.algebra.dim();
    for trial in 0..6 {
        let a = AffineSubspace::new(random_int_vector(rng, n, 2), random_subspace(rng, n))?;
        let b = if trial % 2 == 0 {
            let extra = AffineSubspace::new(random_int_vector(rng, n, 1), random_subspace(rng, n))?;
            a.sum(&extra)?
        } else {
            AffineSubspace::new(random_int_vector(rng, n, 2), random_subspace(rng, n))?
        };
        let eqs = equations(&b)?;
        let satisfies = |x: &[Rational]| eqs.iter().all(|(row, c)| vector::dot(row, x) == *c);
        let mut points = vec![a.point().to_vec()];
        points.extend(a.direction().basis_vectors().map(|d| vector::add(a.point(), d)));
        points.extend((0..10).map(|_| a.sample(rng, 3)));
        let sampled = points.iter().all(|p| satisfies(p));
        let leq = a.leq(&b)?;
        t.check(leq == sampled, || format!("containment {leq} but sampling {sampled} for {a:?} in {b:?}"));
    }
    Ok(())
}

// -------------------------------------------------------------------- lie

fn filtration_ideals(inst: &Instance, _: &mut ChaCha8Rng, _: &CheckConfig, t: &mut Tally) -> Result<()> {
    let g = inst.algebra.algebra();
    let n = g.dim();
    for (i, m) in inst.algebra.filtration().members().iter().enumerate() {
        let mut ok = true;
        for b in m.basis_vectors() {
            for j in 0..n {
                ok &= m.contains(&g.bracket(&vector::unit(n, j), b)?)?;
            }
        }
        t.check(ok, || format!("member {i} is not an ideal"));
    }
    Ok(())
}

fn derived_series(inst: &Instance, _: &mut ChaCha8Rng, _: &CheckConfig, t: &mut Tally) -> Result<()> {
    let series = inst.algebra.algebra().derived_series();
    let n = inst.algebra.dim();
    let ends = series.last().is_some_and(Subspace::is_zero);
    t.check(ends && series.len() <= n + 1, || format!("derived series of length {}", series.len()));
    Ok(())
}

fn induced_filtration(inst: &Instance, rng: &mut ChaCha8Rng, _: &CheckConfig, t: &mut Tally) -> Result<()> {
    let g = inst.algebra.algebra();
    for _ in 0..3 {
        let space = random_subalgebra(rng, g)?;
        let sub = Subalgebra::new(g, space)?;
        let induced = sub.induced_filtration(inst.algebra.filtration())?;
        let report = induced.validate(sub.algebra());
        t.check(report.is_valid(), || format!("induced filtration invalid: {}", report.messages().join("; ")));
    }
    Ok(())
}

fn product_valid(inst: &Instance, _: &mut ChaCha8Rng, _: &CheckConfig, t: &mut Tally) -> Result<()> {
    let p = inst.algebra.product();
    t.check(p.algebra().validate().is_valid(), || "product algebra invalid".into());
    t.check(p.filtration().validate(p.algebra()).is_valid(), || "product filtration invalid".into());
    let (d, stretched) = diagonal_embedding(inst.algebra.algebra(), inst.algebra.filtration());
    let report = d.validate(inst.algebra.algebra(), &stretched, p.algebra(), p.filtration());
    t.check(report.is_valid(), || format!("diagonal: {}", report.messages().join("; ")));
    t.check(stretched.equals(inst.algebra.filtration()), || "stretched filtration differs".into());
    Ok(())
}

// ------------------------------------------------------------------ polar

fn vergne_is_polarization(inst: &Instance, rng: &mut ChaCha8Rng, _: &CheckConfig, t: &mut Tally) -> Result<()> {
    let fa = &inst.algebra;
    let g = fa.algebra();
    let n = fa.dim();
    for f in functionals(inst, rng, 3) {
        let p = match vergne_polarization(fa, &f) {
            Ok(p) => p.space().clone(),
            Err(e) => {
                t.check(false, || format!("f = {}: {e}", show(f.coords())));
                continue;
            }
        };
        let stab = stabilizer(g, &f, &Subspace::full(n))?;
        t.check(g.is_subalgebra(&p)?, || format!("pv({}) not a subalgebra", show(f.coords())));
        t.check(f.is_character_on(g, &p)?, || format!("pv({}) not isotropic", show(f.coords())));
        t.check(2 * p.dim() == n + stab.dim(), || {
            format!("dim pv({}) = {} but dim g^f = {}", show(f.coords()), p.dim(), stab.dim())
        });
        t.check(stab.leq(&p)?, || format!("g^f not inside pv({})", show(f.coords())));
    }
    Ok(())
}

fn compatibility(inst: &Instance, rng: &mut ChaCha8Rng, _: &CheckConfig, t: &mut Tally) -> Result<()> {
    let fa = &inst.algebra;
    for f in functionals(inst, rng, 1) {
        let p = pv(fa, &f)?;
        for (i, m) in fa.filtration().members().iter().enumerate() {
            let sub = Subalgebra::new(fa.algebra(), m.clone())?;
            let local = fa.restrict_to(&sub)?;
            let fi = Functional::new(sub.restrict(f.coords())?);
            let pi = sub.subspace_to_parent(&pv(&local, &fi)?)?;
            t.check(p.intersect(m)? == pi, || format!("member {i}, f = {}", show(f.coords())));
        }
    }
    Ok(())
}

fn stabilizer_extension(inst: &Instance, rng: &mut ChaCha8Rng, config: &CheckConfig, t: &mut Tally) -> Result<()> {
    let fa = &inst.algebra;
    let g = fa.algebra();
    let n = fa.dim();
    let Some(g1) = first_step(fa) else {
        t.skip();
        return Ok(());
    };
    for f in functionals(inst, rng, 2) {
        let rel = relative_stabilizer(g, &f, &g1)?;
        if !rel.sum(&g1)?.is_full() {
            t.skip();
            continue;
        }
        for _ in 0..config.samples {
            let ext = perturb_off(rng, &f, &g1);
            let stab = stabilizer(g, &ext, &Subspace::full(n))?;
            t.check(stab.sum(&g1)?.is_full(), || format!("extension {} of f1", show(ext.coords())));
        }
    }
    Ok(())
}

fn uniqueness(inst: &Instance, rng: &mut ChaCha8Rng, config: &CheckConfig, t: &mut Tally) -> Result<()> {
    let fa = &inst.algebra;
    let Some(g1) = first_step(fa) else {
        t.skip();
        return Ok(());
    };
    let sub = Subalgebra::new(fa.algebra(), g1.clone())?;
    let local = fa.restrict_to(&sub)?;
    let f = &inst.functional;
    let p = pv(fa, f)?;
    let p1 = sub.subspace_to_parent(&pv(&local, &Functional::new(sub.restrict(f.coords())?))?)?;
    for k in 0..config.samples {
        // half the samples inside R(f), half only agreeing on p1
        let g = if k % 2 == 0 {
            perturb_off(rng, f, &p)
        } else {
            perturb_off(rng, f, &p1)
        };
        let q1 = sub.subspace_to_parent(&pv(&local, &Functional::new(sub.restrict(g.coords())?))?)?;
        let q = pv(fa, &g)?;
        if q1 != p1 || q.intersect(&g1)? != p1 {
            t.skip();
            continue;
        }
        t.check(q == p, || format!("g = {} agrees on p1 but pv differs", show(g.coords())));
    }
    Ok(())
}

fn theta_character(inst: &Instance, rng: &mut ChaCha8Rng, _: &CheckConfig, t: &mut Tally) -> Result<()> {
    let fa = &inst.algebra;
    let g = fa.algebra();
    for f in functionals(inst, rng, 2) {
        let p = pv(fa, &f)?;
        let th = theta(g, &p)?;
        let basis: Vec<&[Rational]> = p.basis_vectors().collect();
        let mut ok = true;
        for (i, a) in basis.iter().enumerate() {
            for b in &basis[i + 1..] {
                let coords = p.coordinates(&g.bracket(a, b)?)?.ok_or(Error::NotSubalgebra)?;
                ok &= vector::dot(&th, &coords).is_zero();
            }
        }
        t.check(ok, || format!("theta nonzero on [p, p] for f = {}", show(f.coords())));
    }
    Ok(())
}

// -------------------------------------------------------------------- pbw

fn vergne_module(inst: &Instance, f: &Functional) -> Result<InducedModule> {
    InducedModule::vergne(&inst.algebra, f)
}

fn representation(inst: &Instance, rng: &mut ChaCha8Rng, config: &CheckConfig, t: &mut Tally) -> Result<()> {
    if !module_ok(inst, config) {
        t.skip();
        return Ok(());
    }
    let g = inst.algebra.algebra();
    let n = g.dim();
    let m = vergne_module(inst, &inst.functional)?;
    for _ in 0..config.triples {
        let a = random_int_vector(rng, n, 2);
        let b = random_int_vector(rng, n, 2);
        let v = random_module_element(rng, m.vars(), 5, 3);
        let lhs = m.act(&g.bracket(&a, &b)?, &v)?;
        let ab = m.act(&a, &m.act(&b, &v)?)?;
        let ba = m.act(&b, &m.act(&a, &v)?)?;
        t.check(lhs == ab.sub(&ba), || {
            format!("a = {}, b = {}, v = {}", show(&a), show(&b), m.render(&v))
        });
    }
    Ok(())
}

fn random_word(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> UeaElement {
    let len = rng.gen_range(0..=max_len);
    let word = (0..len).map(|_| rng.gen_range(0..n)).collect();
    UeaElement::term(word, small_rational(rng))
}

fn normal_order_associative(inst: &Instance, rng: &mut ChaCha8Rng, config: &CheckConfig, t: &mut Tally) -> Result<()> {
    let fa = &inst.algebra;
    let n = fa.dim();
    let bases = [
        AdaptedBasis::standard(fa.algebra()),
        AdaptedBasis::new(fa.algebra(), &pv(fa, &inst.functional)?)?,
    ];
    for basis in &bases {
        for _ in 0..config.samples / 2 {
            let u = &random_word(rng, n, 2) + &random_word(rng, n, 2);
            let v = random_word(rng, n, 2);
            let w = random_word(rng, n, 2);
            let left = normal_order(&(&normal_order(&(&u * &v), basis)? * &w), basis)?;
            let right = normal_order(&(&u * &normal_order(&(&v * &w), basis)?), basis)?;
            let direct = normal_order(&(&(&u * &v) * &w), basis)?;
            t.check(left == right && right == direct && direct.is_normal_ordered(), || {
                format!("u = {u}, v = {v}, w = {w}")
            });
            t.check(normal_order(&direct, basis)? == direct, || format!("not idempotent on {direct}"));
        }
    }
    Ok(())
}

fn normal_order_action(inst: &Instance, rng: &mut ChaCha8Rng, config: &CheckConfig, t: &mut Tally) -> Result<()> {
    if !module_ok(inst, config) {
        t.skip();
        return Ok(());
    }
    let n = inst.algebra.dim();
    let m = vergne_module(inst, &inst.functional)?;
    for _ in 0..config.samples {
        let u = &random_word(rng, n, 4) + &random_word(rng, n, 3);
        let acted = m.act_uea(&u, &m.cyclic())?;
        let projected = m.project(&normal_order(&m.to_adapted_letters(&u)?, m.basis())?)?;
        t.check(acted == projected, || format!("u = {u}: {} vs {}", m.render(&acted), m.render(&projected)));
    }
    Ok(())
}

fn cyclic_eigen(inst: &Instance, rng: &mut ChaCha8Rng, config: &CheckConfig, t: &mut Tally) -> Result<()> {
    if !module_ok(inst, config) {
        t.skip();
        return Ok(());
    }
    for f in functionals(inst, rng, 1) {
        let m = vergne_module(inst, &f)?;
        let l = m.cyclic();
        for x in pv(&inst.algebra, &f)?.basis_vectors() {
            let expected = l.scale(&f.eval(x)?);
            t.check(m.act(x, &l)? == expected, || format!("x = {} for f = {}", show(x), show(f.coords())));
        }
    }
    Ok(())
}

fn highest(inst: &Instance, rng: &mut ChaCha8Rng, config: &CheckConfig, t: &mut Tally) -> Result<()> {
    if !module_ok(inst, config) {
        t.skip();
        return Ok(());
    }
    let n = inst.algebra.dim();
    for f in functionals(inst, rng, 1) {
        let m = vergne_module(inst, &f)?;
        let hv = highest_vectors(&m, config.degree)?;
        let p = pv(&inst.algebra, &f)?;
        let rows: Vec<Vector> = p
            .basis_vectors()
            .map(|b| {
                let mut r = b.to_vec();
                r.push(f.eval(b).expect("same dimension"));
                r
            })
            .collect();
        let expected = Subspace::span(n + 1, rows)?;
        t.check(hv == expected, || format!("f = {}: got {hv:?}", show(f.coords())));
    }
    Ok(())
}

fn cyclic_generates(inst: &Instance, _: &mut ChaCha8Rng, config: &CheckConfig, t: &mut Tally) -> Result<()> {
    if !module_ok(inst, config) {
        t.skip();
        return Ok(());
    }
    let m = vergne_module(inst, &inst.functional)?;
    let s = bounded_submodule(&m, &[m.cyclic()], config.degree)?;
    t.check(s.is_full(), || format!("U(g) l has dimension {} in its slice", s.dim()));
    Ok(())
}

fn slice_exhausted(inst: &Instance, rng: &mut ChaCha8Rng, config: &CheckConfig, t: &mut Tally) -> Result<()> {
    if !module_ok(inst, config) {
        t.skip();
        return Ok(());
    }
    let fa = &inst.algebra;
    let n = fa.dim();
    let Some((i1, g1)) = fa.filtration().first_proper().map(|(i, s)| (i, s.clone())) else {
        t.skip();
        return Ok(());
    };
    for f in functionals(inst, rng, 2) {
        let stab = stabilizer(fa.algebra(), &f, &Subspace::full(n))?;
        if !stab.sum(&g1)?.is_full() {
            t.skip();
            continue;
        }
        let m = vergne_module(inst, &f)?;
        for d in 1..=config.degree {
            let s = module_filtration_slice(&m, fa, i1, d)?;
            t.check(s.is_full(), || format!("f = {}, D = {d}: U(g1) l has dimension {}", show(f.coords()), s.dim()));
        }
    }
    Ok(())
}

/// Index of the unique module variable outside `g1`, provided it is the
/// first variable and all others lie in `g1`.
fn leading_t_var(m: &InducedModule, g1: &Subspace) -> Result<Option<usize>> {
    let outside: Vec<usize> = (0..m.vars())
        .filter(|&a| !g1.contains(m.basis().vector(a)).expect("same dimension"))
        .collect();
    Ok((outside == [0]).then_some(0))
}

fn times_t_power(v: &ModuleElement, t_var: usize, k: u32) -> ModuleElement {
    let mut out = ModuleElement::zero(v.vars());
    for (mono, c) in v.terms() {
        let mut e = mono.exponents().to_vec();
        e[t_var] += k;
        out.add_term(Monomial::from_exponents(e), c.clone());
    }
    out
}

fn t_filtration(inst: &Instance, rng: &mut ChaCha8Rng, config: &CheckConfig, t: &mut Tally) -> Result<()> {
    if !module_ok(inst, config) {
        t.skip();
        return Ok(());
    }
    let fa = &inst.algebra;
    let n = fa.dim();
    let Some(g1) = first_step(fa) else {
        t.skip();
        return Ok(());
    };
    for f in functionals(inst, rng, 2) {
        let stab = stabilizer(fa.algebra(), &f, &Subspace::full(n))?;
        if !stab.leq(&g1)? {
            t.skip();
            continue;
        }
        let m = vergne_module(inst, &f)?;
        let Some(tv) = leading_t_var(&m, &g1)? else {
            t.skip();
            continue;
        };
        for k in 0..=config.degree {
            let budget = config.degree - k;
            let monos: Vec<Monomial> = Slice::new(m.vars(), budget)
                .monomials()
                .iter()
                .filter(|mu| mu.exponent(tv) == 0)
                .cloned()
                .collect();
            for mu in monos {
                let v = ModuleElement::monomial(mu.clone());
                for u in g1.basis_vectors() {
                    let lhs = m.act(u, &times_t_power(&v, tv, k))?;
                    let rhs = times_t_power(&m.act(u, &v)?, tv, k);
                    let diff = lhs.sub(&rhs);
                    let deg = t_degree(&diff, tv);
                    let ok = match k {
                        0 => deg == TDegree::NegInfinity,
                        _ => deg < TDegree::Finite(k),
                    };
                    t.check(ok, || {
                        format!("f = {}, k = {k}, v = {}, u = {}: t-degree {deg}", show(f.coords()), m.render(&v), show(u))
                    });
                }
            }
        }
    }
    Ok(())
}

/// The module `ind(f|p1, g)` with `p1 = pv_1(f_1)`, together with some
/// `t ∈ g^{f1} \ g1`, when `g^{f1} + g1 = g`.
fn relative_setting(inst: &Instance, f: &Functional) -> Result<Option<(InducedModule, Vector, Subspace)>> {
    let fa = &inst.algebra;
    let g = fa.algebra();
    let Some(g1) = first_step(fa) else {
        return Ok(None);
    };
    let rel = relative_stabilizer(g, f, &g1)?;
    if !rel.sum(&g1)?.is_full() {
        return Ok(None);
    }
    let tvec = rel
        .basis_vectors()
        .find(|v| !g1.contains(v).expect("same dimension"))
        .ok_or_else(|| Error::Internal("relative stabilizer inside g1".into()))?
        .to_vec();
    let sub = Subalgebra::new(g, g1)?;
    let local = fa.restrict_to(&sub)?;
    let p1 = sub.subspace_to_parent(&pv(&local, &Functional::new(sub.restrict(f.coords())?))?)?;
    let m = InducedModule::from_functional(g, &p1, f)?;
    Ok(Some((m, tvec, p1)))
}

fn shifted_generator(inst: &Instance, rng: &mut ChaCha8Rng, config: &CheckConfig, t: &mut Tally) -> Result<()> {
    if !module_ok(inst, config) {
        t.skip();
        return Ok(());
    }
    let d = config.degree;
    for f in functionals(inst, rng, 2) {
        let Some((m, tvec, _)) = relative_setting(inst, &f)? else {
            t.skip();
            continue;
        };
        let slice = Slice::new(m.vars(), d);
        let line = power_line(&m, &tvec, d)?;
        for alpha in [int(0), int(1), rat(-2, 3)] {
            let l = m.cyclic();
            let gen = m.act(&tvec, &l)?.sub(&l.scale(&alpha));
            let sub = bounded_submodule(&m, &[gen.clone()], d)?;
            let mut rows = Vec::new();
            let mut w = gen.clone();
            for _ in 0..d {
                rows.push(slice.coords(&w)?);
                w = m.act(&tvec, &w)?;
            }
            let expected = Subspace::span(slice.len(), rows)?;
            let meet = sub.intersect(&line)?;
            t.check(meet == expected, || {
                format!(
                    "f = {}, t = {}, alpha = {alpha}: intersection has dimension {}, expected {}",
                    show(f.coords()),
                    show(&tvec),
                    meet.dim(),
                    expected.dim()
                )
            });
        }
    }
    Ok(())
}

fn t_powers_eigen(inst: &Instance, rng: &mut ChaCha8Rng, config: &CheckConfig, t: &mut Tally) -> Result<()> {
    if !module_ok(inst, config) {
        t.skip();
        return Ok(());
    }
    let g = inst.algebra.algebra();
    for f in functionals(inst, rng, 2) {
        let Some((m, tvec, p1)) = relative_setting(inst, &f)? else {
            t.skip();
            continue;
        };
        let invariant = crate::polar::ad_invariant(g, &p1, &tvec)?;
        let mut isotropic = true;
        for y in p1.basis_vectors() {
            isotropic &= f.eval(&g.bracket(&tvec, y)?)?.is_zero();
        }
        t.check(invariant && isotropic, || format!("t = {} does not normalize p1", show(&tvec)));
        let mut w = m.cyclic();
        for k in 0..=config.degree {
            for y in p1.basis_vectors() {
                let lhs = m.act(y, &w)?;
                t.check(lhs == w.scale(&f.eval(y)?), || {
                    format!("f = {}, y = {}, k = {k}", show(f.coords()), show(y))
                });
            }
            w = m.act(&tvec, &w)?;
        }
    }
    Ok(())
}

fn quotient_codimension(inst: &Instance, rng: &mut ChaCha8Rng, config: &CheckConfig, t: &mut Tally) -> Result<()> {
    if !module_ok(inst, config) {
        t.skip();
        return Ok(());
    }
    let fa = &inst.algebra;
    let g = fa.algebra();
    let d = config.degree.min(3);
    for _ in 0..3 {
        let sub = Subalgebra::new(g, random_subalgebra(rng, g)?)?;
        let local = fa.restrict_to(&sub)?;
        let mut f = inst.functional.clone();
        let mut h = Functional::new(sub.restrict(f.coords())?);
        if !spec_induced_member(fa, &sub, &h, &f)? {
            h = random_functional(rng, sub.dim());
            f = Functional::new(spec_induced_space(fa, &sub, &h)?.sample(rng, 2));
            if !spec_induced_member(fa, &sub, &h, &f)? {
                t.skip();
                continue;
            }
        }
        let q = sub.subspace_to_parent(&pv(&local, &h)?)?;
        let ind = InducedModule::from_functional(g, &q, &f)?;
        let l = ind.cyclic();
        let mut gens = Vec::new();
        for x in pv(fa, &f)?.basis_vectors() {
            gens.push(ind.act(x, &l)?.sub(&l.scale(&f.eval(x)?)));
        }
        let z = bounded_submodule(&ind, &gens, d)?;
        let codim = Slice::new(ind.vars(), d).len() - z.dim();
        let target = Slice::new(vergne_module(inst, &f)?.vars(), d).len();
        t.check(codim == target, || {
            format!("h on {:?}, f = {}: codimension {codim}, expected {target}", sub.space(), show(f.coords()))
        });
    }
    Ok(())
}

// ---------------------------------------------------------------- classes

fn equivalence(inst: &Instance, rng: &mut ChaCha8Rng, config: &CheckConfig, t: &mut Tally) -> Result<()> {
    let fa = &inst.algebra;
    let n = fa.dim();
    for _ in 0..config.samples / 4 {
        let f = random_functional(rng, n);
        let g = if rng.gen_ratio(1, 2) {
            Functional::new(r_class(fa, &f)?.set().sample(rng, 2))
        } else {
            random_functional(rng, n)
        };
        let k = if rng.gen_ratio(1, 2) {
            Functional::new(r_class(fa, &g)?.set().sample(rng, 2))
        } else {
            random_functional(rng, n)
        };
        let fg = modules_equivalent(fa, &f, &g)?;
        let gf = modules_equivalent(fa, &g, &f)?;
        let gk = modules_equivalent(fa, &g, &k)?;
        let fk = modules_equivalent(fa, &f, &k)?;
        t.check(modules_equivalent(fa, &f, &f)?, || format!("not reflexive at {}", show(f.coords())));
        t.check(fg == gf, || format!("not symmetric at {}, {}", show(f.coords()), show(g.coords())));
        t.check(!(fg && gk) || fk, || format!("not transitive at {}", show(k.coords())));
    }
    Ok(())
}

fn membership(inst: &Instance, rng: &mut ChaCha8Rng, config: &CheckConfig, t: &mut Tally) -> Result<()> {
    let fa = &inst.algebra;
    let f = &inst.functional;
    let class = r_class(fa, f)?;
    let p = class.polarization().space().clone();
    for _ in 0..config.samples {
        let g = Functional::new(class.set().sample(rng, 5));
        t.check(pv(fa, &g)? == p, || format!("pv({}) differs from pv(f)", show(g.coords())));
        t.check(modules_equivalent(fa, f, &g)?, || format!("{} not equivalent to f", show(g.coords())));
    }
    let pivots = p.pivots().to_vec();
    for _ in 0..config.samples {
        let mut g = class.set().sample(rng, 5);
        let j = *pivots.choose(rng).ok_or_else(|| Error::Internal("zero polarization".into()))?;
        let mut delta = small_rational(rng);
        if delta.is_zero() {
            delta = int(1);
        }
        g[j] += delta;
        let g = Functional::new(g);
        t.check(!class.set().contains(g.coords())?, || "perturbed functional still in the class".into());
        t.check(!modules_equivalent(fa, f, &g)?, || format!("perturbed {} still equivalent", show(g.coords())));
    }
    Ok(())
}

fn class_dimension(inst: &Instance, rng: &mut ChaCha8Rng, _: &CheckConfig, t: &mut Tally) -> Result<()> {
    let fa = &inst.algebra;
    for f in functionals(inst, rng, 2) {
        let c = r_class(fa, &f)?;
        t.check(c.set().dim() + c.polarization().space().dim() == fa.dim(), || {
            format!("dimensions for f = {}", show(f.coords()))
        });
    }
    Ok(())
}

fn random_sub(inst: &Instance, rng: &mut ChaCha8Rng) -> Result<Subalgebra> {
    let g = inst.algebra.algebra();
    Subalgebra::new(g, random_subalgebra(rng, g)?)
}

fn induced_agreement(inst: &Instance, rng: &mut ChaCha8Rng, config: &CheckConfig, t: &mut Tally) -> Result<()> {
    let fa = &inst.algebra;
    let sub = random_sub(inst, rng)?;
    let h = if rng.gen_ratio(1, 2) {
        Functional::new(sub.restrict(inst.functional.coords())?)
    } else {
        random_functional(rng, sub.dim())
    };
    let space = spec_induced_space(fa, &sub, &h)?;
    for k in 0..config.samples {
        let f = if k % 2 == 0 {
            Functional::new(space.sample(rng, 3))
        } else {
            random_functional(rng, fa.dim())
        };
        let by_conditions = spec_induced_member(fa, &sub, &h, &f)?;
        let by_containment = spec_induced_member_affine(fa, &sub, &h, &f)?;
        t.check(by_conditions == by_containment, || {
            format!("h = {} on {:?}, f = {}", show(h.coords()), sub.space(), show(f.coords()))
        });
    }
    Ok(())
}

fn restriction_agreement(inst: &Instance, rng: &mut ChaCha8Rng, config: &CheckConfig, t: &mut Tally) -> Result<()> {
    let fa = &inst.algebra;
    let sub = random_sub(inst, rng)?;
    let f = &inst.functional;
    let space = spec_restrict_space(fa, f, &sub)?;
    for k in 0..config.samples {
        let h = if k % 2 == 0 {
            Functional::new(space.sample(rng, 3))
        } else {
            random_functional(rng, sub.dim())
        };
        let by_conditions = spec_restrict_member(fa, f, &sub, &h)?;
        let by_containment = spec_restrict_member_affine(fa, f, &sub, &h)?;
        t.check(by_conditions == by_containment, || {
            format!("f = {}, h = {} on {:?}", show(f.coords()), show(h.coords()), sub.space())
        });
    }
    Ok(())
}

fn restriction_whole(inst: &Instance, rng: &mut ChaCha8Rng, config: &CheckConfig, t: &mut Tally) -> Result<()> {
    let fa = &inst.algebra;
    let whole = Subalgebra::whole(fa.algebra());
    let f = &inst.functional;
    let class = r_class(fa, f)?;
    for k in 0..config.samples / 2 {
        let g = if k % 2 == 0 {
            Functional::new(class.set().sample(rng, 3))
        } else {
            random_functional(rng, fa.dim())
        };
        let eq = modules_equivalent(fa, f, &g)?;
        t.check(spec_restrict_member(fa, f, &whole, &g)? == eq, || format!("g = {}", show(g.coords())));
        t.check(spec_restrict_member_affine(fa, f, &whole, &g)? == eq, || format!("g = {}", show(g.coords())));
    }
    Ok(())
}

fn tensor_agreement(inst: &Instance, rng: &mut ChaCha8Rng, config: &CheckConfig, t: &mut Tally) -> Result<()> {
    let fa = &inst.algebra;
    let f1 = &inst.functional;
    let f2 = random_functional(rng, fa.dim());
    let space = spec_tensor_space(fa, f1, &f2)?;
    for k in 0..config.samples {
        let g = if k % 2 == 0 {
            Functional::new(space.sample(rng, 3))
        } else {
            Functional::new(random_rational_vector(rng, fa.dim()))
        };
        let by_containment = spec_tensor_member(fa, f1, &f2, &g)?;
        let by_diagonal = spec_tensor_member_diagonal(fa, f1, &f2, &g)?;
        t.check(by_containment == by_diagonal, || {
            format!("f' = {}, f'' = {}, g = {}", show(f1.coords()), show(f2.coords()), show(g.coords()))
        });
    }
    Ok(())
}

fn product_classes(inst: &Instance, rng: &mut ChaCha8Rng, _: &CheckConfig, t: &mut Tally) -> Result<()> {
    let fa = &inst.algebra;
    let f2 = random_functional(rng, fa.dim());
    t.check(product_class_check(fa, &inst.functional, &f2)?, || {
        format!("f' = {}, f'' = {}", show(inst.functional.coords()), show(f2.coords()))
    });
    Ok(())
}

fn constancy(inst: &Instance, rng: &mut ChaCha8Rng, config: &CheckConfig, t: &mut Tally) -> Result<()> {
    let fa = &inst.algebra;
    for f in functionals(inst, rng, 1) {
        let seed = rng.gen();
        t.check(dixmier_constancy_check(fa, &f, config.samples, seed)?, || {
            format!("f = {}, seed {seed}", show(f.coords()))
        });
    }
    Ok(())
}

// ----------------------------------------------------------------- format

fn round_trip(inst: &Instance, _: &mut ChaCha8Rng, _: &CheckConfig, t: &mut Tally) -> Result<()> {
    let mut file = ProblemFile::from_algebra(&inst.algebra);
    file.functionals.push(("f".into(), inst.functional.coords().to_vec()));
    let text = file.to_string();
    match parse(&text) {
        Ok(back) => {
            t.check(back == file, || format!("reparsed file differs:\n{text}"));
            let rebuilt = back.build()?;
            t.check(rebuilt.algebra == inst.algebra, || "rebuilt algebra differs".into());
        }
        Err(e) => t.check(false, || format!("{e}\n{text}")),
    }
    Ok(())
}

/// Renders a vector with the names of the instance's basis.
pub fn describe_vector(inst: &Instance, v: &[Rational]) -> String {
    format_linear(inst.algebra.algebra().names(), v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_property_passes_on_a_few_instances() {
        let config = CheckConfig::default();
        let props: Vec<&Property> = PROPERTIES.iter().collect();
        for index in 0..6 {
            let inst = instance(3, index, &config).unwrap();
            let report = run_instance(&inst, &props, &config);
            for (name, tally) in &report.results {
                assert!(tally.passed(), "instance {index}, {name}: {:?}", tally.failures);
            }
        }
    }

    #[test]
    fn instances_are_reproducible() {
        let config = CheckConfig::default();
        let a = instance(11, 4, &config).unwrap();
        let b = instance(11, 4, &config).unwrap();
        assert_eq!(a.algebra, b.algebra);
        assert_eq!(a.functional, b.functional);
    }

    #[test]
    fn property_names_are_unique() {
        for (i, p) in PROPERTIES.iter().enumerate() {
            assert!(PROPERTIES[i + 1..].iter().all(|q| q.name != p.name), "{}", p.name);
        }
    }
}
