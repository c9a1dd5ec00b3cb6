//! Product-type functions `F(e β1 + e† β2) = e F1(β1) + e† F2(β2)` given by
//! their two complex components.

use num_complex::Complex64;

use crate::algebra::Bicomplex;
use crate::quadrature::Part;

pub trait ProductFunction: Sync {
    /// Evaluates the component `F_i` at the complex point `beta`.
    fn component(&self, part: Part, beta: Complex64) -> Complex64;

    fn eval(&self, z: &Bicomplex) -> Bicomplex {
        let (b1, b2) = z.to_idempotent();
        Bicomplex::from_idempotent(
            self.component(Part::First, b1),
            self.component(Part::Second, b2),
        )
    }
}

impl<T: ProductFunction + ?Sized> ProductFunction for &T {
    fn component(&self, part: Part, beta: Complex64) -> Complex64 {
        (**self).component(part, beta)
    }
}

impl<T: ProductFunction + ?Sized> ProductFunction for Box<T> {
    fn component(&self, part: Part, beta: Complex64) -> Complex64 {
        (**self).component(part, beta)
    }
}

/// A product function built from two closures.
#[derive(Clone, Copy, Debug)]
pub struct ProductFn<F1, F2> {
    pub first: F1,
    pub second: F2,
}

impl<F1, F2> ProductFn<F1, F2>
where
    F1: Fn(Complex64) -> Complex64 + Sync,
    F2: Fn(Complex64) -> Complex64 + Sync,
{
    pub fn new(first: F1, second: F2) -> Self {
        Self { first, second }
    }
}

impl<F> ProductFn<F, F>
where
    F: Fn(Complex64) -> Complex64 + Sync + Clone,
{
    /// The same complex function on both components.
    pub fn diagonal(f: F) -> Self {
        Self {
            first: f.clone(),
            second: f,
        }
    }
}

impl<F1, F2> ProductFunction for ProductFn<F1, F2>
where
    F1: Fn(Complex64) -> Complex64 + Sync,
    F2: Fn(Complex64) -> Complex64 + Sync,
{
    fn component(&self, part: Part, beta: Complex64) -> Complex64 {
        match part {
            Part::First => (self.first)(beta),
            Part::Second => (self.second)(beta),
        }
    }
}

/// Pointwise complex conjugate of each component. Not holomorphic unless the
/// wrapped function is constant.
#[derive(Clone, Copy, Debug)]
pub struct Conjugated<F>(pub F);

impl<F: ProductFunction> ProductFunction for Conjugated<F> {
    fn component(&self, part: Part, beta: Complex64) -> Complex64 {
        self.0.component(part, beta).conj()
    }
}

/// The zero function.
#[derive(Clone, Copy, Debug, Default)]
pub struct Zero;

impl ProductFunction for Zero {
    fn component(&self, _: Part, _: Complex64) -> Complex64 {
        Complex64::default()
    }
}
