use solvrep_core::classes::{
    modules_equivalent, product_class_check, r_class, spec_induced_member, spec_induced_space, spec_restrict_member,
    spec_tensor_member, spec_tensor_space,
};
use solvrep_core::exact::{int, rat, rref, vector};
use solvrep_core::lie::{diagonal_embedding, product_algebra};
use solvrep_core::pbw::{module_filtration_slice, normal_order, AdaptedBasis, UeaElement};
use solvrep_core::polar::{is_polarization, theta, twisted_character, vergne_polarization};
use solvrep_core::problem::builtin;
use solvrep_core::random::upper_triangular;
use solvrep_core::{
    AffineSubspace, FilteredAlgebra, Filtration, Functional, InducedModule, LieAlgebra, Matrix, Subalgebra,
    Subspace,
};

fn ints(xs: &[i64]) -> Vec<solvrep_core::Rational> {
    xs.iter().map(|&x| int(x)).collect()
}

fn span(n: usize, rows: &[&[i64]]) -> Subspace {
    Subspace::span(n, rows.iter().map(|r| ints(r))).unwrap()
}

fn f(xs: &[i64]) -> Functional {
    Functional::from_ints(xs)
}

fn axb() -> FilteredAlgebra {
    builtin("axb").unwrap().algebra
}

fn heisenberg() -> FilteredAlgebra {
    builtin("heisenberg").unwrap().algebra
}

#[test]
fn rref_by_hand() {
    let m = Matrix::from_rows(2, [ints(&[2, 4]), ints(&[1, 2])]).unwrap();
    assert_eq!(rref(&m), Matrix::from_rows(2, [ints(&[1, 2]), ints(&[0, 0])]).unwrap());
}

#[test]
fn brackets_of_the_examples() {
    let h = heisenberg();
    assert_eq!(h.algebra().bracket(&ints(&[1, 0, 0]), &ints(&[0, 1, 0])).unwrap(), ints(&[0, 0, 1]));
    let a = axb();
    assert_eq!(a.algebra().bracket(&ints(&[0, 1]), &ints(&[1, 0])).unwrap(), ints(&[0, -1]));
    assert!(h.algebra().validate().is_valid());
    assert!(h.filtration().validate(h.algebra()).is_valid());
    assert_eq!(h.filtration().len(), 3);
}

#[test]
fn jacobi_violation_is_reported() {
    let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    let g = LieAlgebra::from_brackets(
        names,
        &[(0, 1, ints(&[1, 0, 0])), (1, 2, ints(&[0, 1, 0])), (2, 0, ints(&[0, 0, 1]))],
    )
    .unwrap();
    let report = g.validate();
    assert!(!report.is_valid());
    assert!(report.messages().iter().any(|m| m.contains("jacobi")), "{report}");
}

#[test]
fn non_ideal_filtration_is_rejected() {
    let h = heisenberg();
    let s = Filtration::new(vec![Subspace::full(3), span(3, &[&[1, 0, 0]]), Subspace::zero(3)]);
    assert!(!s.validate(h.algebra()).is_valid());
}

#[test]
fn filtrations_compare_after_removing_repeats() {
    let g1 = span(2, &[&[0, 1]]);
    let a = Filtration::new(vec![Subspace::full(2), g1.clone(), Subspace::zero(2)]);
    let b = Filtration::new(vec![Subspace::full(2), Subspace::full(2), g1.clone(), g1, Subspace::zero(2)]);
    assert!(a.equals(&b));
}

#[test]
fn induced_and_product_filtrations() {
    let a = axb();
    let ky = Subalgebra::new(a.algebra(), span(2, &[&[0, 1]])).unwrap();
    let induced = ky.induced_filtration(a.filtration()).unwrap();
    let dims: Vec<usize> = induced.members().iter().map(Subspace::dim).collect();
    assert_eq!(dims, vec![1, 1, 0]);

    let (p, s) = product_algebra(a.algebra(), a.filtration());
    assert_eq!(p.dim(), 4);
    let dims: Vec<usize> = s.distinct_members().iter().map(Subspace::dim).collect();
    assert_eq!(dims, vec![4, 3, 2, 1, 0]);
    let (_, stretched) = diagonal_embedding(a.algebra(), a.filtration());
    assert!(stretched.equals(a.filtration()));
}

#[test]
fn vergne_polarizations_of_the_examples() {
    let a = axb();
    assert_eq!(*vergne_polarization(&a, &f(&[0, 1])).unwrap().space(), span(2, &[&[0, 1]]));
    for alpha in [0, 5, -2] {
        assert!(vergne_polarization(&a, &f(&[alpha, 0])).unwrap().space().is_full());
    }
    let h = heisenberg();
    let p = vergne_polarization(&h, &f(&[0, 0, 1])).unwrap();
    assert_eq!(*p.space(), span(3, &[&[0, 1, 0], &[0, 0, 1]]));
    assert!(is_polarization(a.algebra(), &span(2, &[&[0, 1]]), &f(&[0, 1])).unwrap());
    assert!(!is_polarization(h.algebra(), &span(3, &[&[1, 0, 0]]), &f(&[0, 0, 1])).unwrap());
}

#[test]
fn theta_of_a_non_nilpotent_polarization() {
    let names: Vec<String> = ["t", "x", "y"].iter().map(|s| s.to_string()).collect();
    let g = LieAlgebra::from_brackets(names, &[(0, 1, ints(&[0, 1, 0])), (0, 2, ints(&[0, 0, 1]))]).unwrap();
    let p = span(3, &[&[1, 0, 0], &[0, 1, 0]]);
    assert_eq!(theta(&g, &p).unwrap(), vec![rat(1, 2), int(0)]);
    assert_eq!(twisted_character(&g, &f(&[0, 0, 1]), &p).unwrap(), vec![rat(-1, 2), int(0)]);
    let h = heisenberg();
    assert_eq!(theta(h.algebra(), &span(3, &[&[0, 1, 0], &[0, 0, 1]])).unwrap(), ints(&[0, 0]));
}

#[test]
fn classes_of_the_examples() {
    let a = axb();
    let c = r_class(&a, &f(&[0, 1])).unwrap();
    assert_eq!(*c.set(), AffineSubspace::new(ints(&[0, 1]), span(2, &[&[1, 0]])).unwrap());
    assert!(modules_equivalent(&a, &f(&[0, 1]), &f(&[7, 1])).unwrap());
    let c = r_class(&a, &f(&[3, 0])).unwrap();
    assert_eq!(*c.set(), AffineSubspace::singleton(ints(&[3, 0])));

    let h = heisenberg();
    let c = r_class(&h, &f(&[0, 2, 5])).unwrap();
    assert_eq!(*c.set(), AffineSubspace::new(ints(&[0, 2, 5]), span(3, &[&[1, 0, 0]])).unwrap());
    assert!(!modules_equivalent(&h, &f(&[0, 0, 1]), &f(&[0, 1, 1])).unwrap());
    assert_eq!(*r_class(&h, &f(&[4, 1, 0])).unwrap().set(), AffineSubspace::singleton(ints(&[4, 1, 0])));
}

#[test]
fn spectra_of_the_examples() {
    let a = axb();
    let ky = Subalgebra::new(a.algebra(), span(2, &[&[0, 1]])).unwrap();
    let h1 = f(&[1]);
    assert_eq!(
        spec_induced_space(&a, &ky, &h1).unwrap(),
        AffineSubspace::new(ints(&[0, 1]), span(2, &[&[1, 0]])).unwrap()
    );
    assert!(spec_induced_member(&a, &ky, &h1, &f(&[0, 1])).unwrap());
    assert!(!spec_induced_member(&a, &ky, &h1, &f(&[0, 2])).unwrap());
    assert!(spec_restrict_member(&a, &f(&[0, 1]), &ky, &f(&[1])).unwrap());
    assert!(!spec_restrict_member(&a, &f(&[0, 1]), &ky, &f(&[0])).unwrap());

    let h = heisenberg();
    let (p, m) = (f(&[0, 0, 1]), f(&[0, 0, -1]));
    assert_eq!(
        spec_tensor_space(&h, &p, &m).unwrap(),
        AffineSubspace::new(ints(&[0, 0, 0]), span(3, &[&[1, 0, 0]])).unwrap()
    );
    for alpha in [-3, 0, 8] {
        assert!(spec_tensor_member(&h, &p, &m, &f(&[alpha, 0, 0])).unwrap());
    }
    assert!(!spec_tensor_member(&h, &p, &m, &f(&[0, 0, 1])).unwrap());
    assert!(product_class_check(&h, &p, &m).unwrap());
    assert!(product_class_check(&a, &f(&[0, 1]), &f(&[0, 1])).unwrap());
}

#[test]
fn normal_ordering_by_hand() {
    let h = heisenberg();
    let basis = AdaptedBasis::standard(h.algebra());
    let yx = UeaElement::word(vec![1, 0]);
    let expected = &UeaElement::word(vec![0, 1]) - &UeaElement::word(vec![2]);
    assert_eq!(normal_order(&yx, &basis).unwrap(), expected);
    let a = axb();
    let basis = AdaptedBasis::standard(a.algebra());
    let expected = &UeaElement::word(vec![0, 1]) - &UeaElement::word(vec![1]);
    assert_eq!(normal_order(&UeaElement::word(vec![1, 0]), &basis).unwrap(), expected);
}

#[test]
fn heisenberg_module_filtration() {
    let h = heisenberg();
    let m = InducedModule::vergne(&h, &f(&[0, 0, 1])).unwrap();
    for d in 1..=4 {
        assert_eq!(module_filtration_slice(&m, &h, 1, d).unwrap().dim(), 1);
        assert!(module_filtration_slice(&m, &h, 0, d).unwrap().is_full());
        assert_eq!(module_filtration_slice(&m, &h, 3, d).unwrap().dim(), 1);
    }
    let l = m.cyclic();
    assert_eq!(m.act(&vector::unit(3, 2), &l).unwrap(), l);
}

#[test]
fn triangular_three_is_heisenberg() {
    let u = upper_triangular(3);
    let g = u.algebra();
    assert_eq!(g.dim(), 3);
    let center = g.derived_series()[1].clone();
    assert_eq!(center.dim(), 1);
    assert!(!g.is_abelian());
    assert!(u.filtration().validate(g).is_valid());
}
