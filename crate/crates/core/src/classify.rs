//! Algebraic classification of codes: 0-piercing, generation by quadratics
//! and the three-neuron 1-piercing test.

use alloc::vec::Vec;

use crate::binomial::Binomial;
use crate::code::Code;
use crate::error::{Error, Result};
use crate::groebner::reduced_groebner_basis;
use crate::order::MonomialOrder;
use crate::toric::{certify_generators, ideal_is_zero, minimal_generators, toric_generators, Method, ToricConfig};

fn require_firing(code: &Code) -> Result<()> {
    let silent = code.silent_neurons();
    if silent.is_empty() {
        return Ok(());
    }
    let names: Vec<alloc::string::String> = silent.iter().map(|i| alloc::format!("{}", i + 1)).collect();
    Err(Error::domain(alloc::format!("neuron(s) {} never fire; classification needs every neuron to fire", names.join(", "))))
}

/// 0-inductively pierced iff the toric ideal is zero.
pub fn is_zero_pierced(code: &Code) -> Result<bool> {
    require_firing(code)?;
    Ok(ideal_is_zero(code))
}

/// Outcome of [`generated_by_quadratics`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticVerdict {
    pub generated_by_quadratics: bool,
    pub zero_ideal: bool,
    /// Largest total degree in the minimal generating set.
    pub max_degree: u64,
    /// Minimal generators, sign-normalized.
    pub generators: Vec<Binomial>,
    /// The generators were checked to generate the whole ideal.
    pub certified: bool,
}

/// Whether the minimal generators all have degree at most two. With
/// `bound = None` the bound is the largest `μ` of an exact generating set,
/// which every minimal generator respects.
pub fn generated_by_quadratics(code: &Code, bound: Option<u64>, config: &ToricConfig) -> Result<QuadraticVerdict> {
    if ideal_is_zero(code) {
        return Ok(QuadraticVerdict {
            generated_by_quadratics: true,
            zero_ideal: true,
            max_degree: 0,
            generators: Vec::new(),
            certified: true,
        });
    }
    let bound = match bound {
        Some(b) => b,
        None => toric_generators(code, Method::Saturation, config)?.max_mu(code),
    };
    let generators = minimal_generators(code, bound, config.monomial_budget)?;
    let certified = certify_generators(code, &generators, &config.engine)?;
    let max_degree = generators.iter().map(Binomial::degree).max().unwrap_or(0);
    Ok(QuadraticVerdict { generated_by_quadratics: max_degree <= 2, zero_ideal: false, max_degree, generators, certified })
}

/// Outcome of [`is_one_pierced_n3`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OnePiercedVerdict {
    pub one_pierced: bool,
    pub order: MonomialOrder,
    /// The reduced Gröbner basis for `order`.
    pub basis: Vec<Binomial>,
    /// Largest degree of a term in the basis.
    pub max_degree: u64,
}

/// For three neurons: the reduced Gröbner basis under weight
/// `(0,0,0,1,1,1,0)` (restricted to the zones present) with grevlex tiebreak
/// has only terms of degree at most two.
pub fn is_one_pierced_n3(code: &Code, config: &ToricConfig) -> Result<OnePiercedVerdict> {
    let order = MonomialOrder::one_pierced_n3(code)?;
    require_firing(code)?;
    let gens = toric_generators(code, Method::Saturation, config)?;
    let basis = reduced_groebner_basis(&gens.elements, &order, &config.engine)?.into_elements();
    let max_degree = basis.iter().map(Binomial::degree).max().unwrap_or(0);
    Ok(OnePiercedVerdict { one_pierced: max_degree <= 2, order, basis, max_degree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::internal_code;

    fn c1() -> Code {
        Code::parse_lines(&["000", "100", "010", "001", "110", "101", "011", "111"]).unwrap()
    }

    fn ci() -> Code {
        Code::parse_lines(&["000", "100", "001", "110", "101", "111"]).unwrap()
    }

    #[test]
    fn zero_pierced_examples() {
        assert!(is_zero_pierced(&Code::parse_lines(&["000", "100", "110", "111"]).unwrap()).unwrap());
        assert!(is_zero_pierced(&Code::parse_lines(&["000", "100", "010", "001"]).unwrap()).unwrap());
        assert!(!is_zero_pierced(&c1()).unwrap());
        assert!(!is_zero_pierced(&ci()).unwrap());
        assert!(is_zero_pierced(&Code::parse_lines(&["000", "100", "110"]).unwrap()).is_err());
    }

    #[test]
    fn quadratic_generation() {
        let cfg = ToricConfig::default();
        let v = generated_by_quadratics(&internal_code(4).unwrap(), None, &cfg).unwrap();
        assert!(v.generated_by_quadratics && v.certified && !v.zero_ideal);
        let z = generated_by_quadratics(&Code::parse_lines(&["00", "10", "01"]).unwrap(), None, &cfg).unwrap();
        assert!(z.generated_by_quadratics && z.zero_ideal);
        // t{1,2,3} - t{1} t{2} t{3} is the only generator
        let cubic = Code::parse_lines(&["000", "100", "010", "001", "111"]).unwrap();
        let v = generated_by_quadratics(&cubic, None, &cfg).unwrap();
        assert!(!v.generated_by_quadratics);
        assert_eq!(v.max_degree, 3);
        assert_eq!(v.generators.len(), 1);
    }

    #[test]
    fn one_pierced_n3() {
        let cfg = ToricConfig::default();
        assert!(is_one_pierced_n3(&ci(), &cfg).unwrap().one_pierced);
        // the three-curve Venn diagram needs a 2-piercing
        let v = is_one_pierced_n3(&c1(), &cfg).unwrap();
        assert!(!v.one_pierced);
        assert_eq!(v.max_degree, 3);
        let four = Code::parse_lines(&["0000", "1000", "0100", "0010", "0001"]).unwrap();
        assert!(is_one_pierced_n3(&four, &cfg).is_err());
    }
}
