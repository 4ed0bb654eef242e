use std::sync::Arc;

use crate::algebra::{subscript, Coefficient, Series, SeriesSpace, Variable};
use crate::error::{Error, Result};

fn check_vars(space: &SeriesSpace, vars: &[usize]) -> Result<u32> {
    let mut degree = None;
    for (k, &v) in vars.iter().enumerate() {
        let var = space
            .variables()
            .get(v)
            .ok_or_else(|| Error::Argument(format!("no variable at position {v}")))?;
        if vars[..k].contains(&v) {
            return Err(Error::Argument(format!("{} listed twice", var.name)));
        }
        if *degree.get_or_insert(var.degree) != var.degree {
            return Err(Error::Argument(
                "symmetric functions need variables of equal degree".into(),
            ));
        }
    }
    Ok(degree.unwrap_or(1))
}

fn squarefree_sum(
    space: &Arc<SeriesSpace>,
    vars: &[usize],
    k: usize,
    start: usize,
    exps: &mut Vec<u32>,
    out: &mut Series,
) {
    if k == 0 {
        out.add_term(exps.clone(), Coefficient::one(space.ring()));
        return;
    }
    for i in start..=vars.len() - k {
        exps[vars[i]] += 1;
        squarefree_sum(space, vars, k - 1, i + 1, exps, out);
        exps[vars[i]] -= 1;
    }
}

/// `e_k` of the listed variables.
pub fn elementary_symmetric(space: &Arc<SeriesSpace>, vars: &[usize], k: usize) -> Result<Series> {
    check_vars(space, vars)?;
    if k > vars.len() {
        return Err(Error::Argument(format!(
            "e_{k} of {} variables",
            vars.len()
        )));
    }
    let mut out = Series::zero(space);
    squarefree_sum(space, vars, k, 0, &mut vec![0; space.arity()], &mut out);
    Ok(out)
}

fn all_monomials(
    space: &Arc<SeriesSpace>,
    vars: &[usize],
    k: u32,
    exps: &mut Vec<u32>,
    out: &mut Series,
) {
    match vars {
        [] if k == 0 => out.add_term(exps.clone(), Coefficient::one(space.ring())),
        [] => {}
        [v, rest @ ..] => {
            for a in 0..=k {
                exps[*v] = a;
                all_monomials(space, rest, k - a, exps, out);
            }
            exps[*v] = 0;
        }
    }
}

/// `h_k`: the sum of all monomials of degree `k` in the listed variables.
pub fn complete_homogeneous(space: &Arc<SeriesSpace>, vars: &[usize], k: u32) -> Result<Series> {
    check_vars(space, vars)?;
    let mut out = Series::zero(space);
    all_monomials(space, vars, k, &mut vec![0; space.arity()], &mut out);
    Ok(out)
}

/// The space of polynomials in `e₁ … e_n` for `n` variables of degree `w`.
pub fn elementary_space(space: &SeriesSpace, n: usize, w: u32) -> Result<Arc<SeriesSpace>> {
    SeriesSpace::new(
        space.ring(),
        (1..=n)
            .map(|j| Variable::new(format!("e{}", subscript(j as u64)), j as u32 * w))
            .collect(),
        space.truncation(),
    )
}

fn swap(x: &Series, a: usize, b: usize) -> Series {
    let mut out = Series::zero(x.space());
    for (e, c) in x.terms() {
        let mut f = e.clone();
        f.swap(a, b);
        out.add_term(f, c.clone());
    }
    out
}

/// First adjacent transposition of `vars` that moves `x`, as `(a, b)`.
pub fn asymmetry_witness(x: &Series, vars: &[usize]) -> Option<(usize, usize)> {
    vars.windows(2)
        .map(|w| (w[0], w[1]))
        .find(|&(a, b)| swap(x, a, b) != *x)
}

/// Rewrites a symmetric element as a polynomial in the elementary symmetric
/// polynomials of `vars`, living in [`elementary_space`].
pub fn express_symmetric(x: &Series, vars: &[usize]) -> Result<Series> {
    let space = x.space();
    let w = check_vars(space, vars)?;
    for (e, _) in x.terms() {
        if e.iter()
            .enumerate()
            .any(|(i, &a)| a > 0 && !vars.contains(&i))
        {
            return Err(Error::Argument(
                "element involves variables outside the symmetric set".into(),
            ));
        }
    }
    if let Some((a, b)) = asymmetry_witness(x, vars) {
        let names = space.variables();
        return Err(Error::Symmetry {
            witness: format!("({} {})", names[a].name, names[b].name),
        });
    }
    let n = vars.len();
    let es = (1..=n)
        .map(|k| elementary_symmetric(space, vars, k))
        .collect::<Result<Vec<_>>>()?;
    let target = elementary_space(space, n, w)?;
    let mut rest = x.clone();
    let mut out = Series::zero(&target);
    while let Some((lead, c)) = rest
        .terms()
        .map(|(e, c)| (vars.iter().map(|&v| e[v]).collect::<Vec<u32>>(), c.clone()))
        .max_by(|a, b| a.0.cmp(&b.0))
    {
        let b: Vec<u32> = (0..n)
            .map(|j| lead[j] - lead.get(j + 1).copied().unwrap_or(0))
            .collect();
        let mut prod = Series::constant(space, c.clone());
        for (e, &p) in es.iter().zip(&b) {
            prod = prod.try_mul(&e.pow(p))?;
        }
        rest = rest.try_sub(&prod)?;
        out.add_term(b, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CoefficientRing;

    fn space(n: usize) -> Arc<SeriesSpace> {
        let names: Vec<String> = (1..=n)
            .map(|i| format!("x{}", subscript(i as u64)))
            .collect();
        let names: Vec<&str> = names.iter().map(String::as_str).collect();
        SeriesSpace::with_names(CoefficientRing::IntegerAdditive, &names, 6).unwrap()
    }

    #[test]
    fn elementary_examples() {
        let s3 = space(3);
        assert_eq!(
            elementary_symmetric(&s3, &[0, 1, 2], 0)
                .unwrap()
                .to_string(),
            "1"
        );
        assert_eq!(
            elementary_symmetric(&s3, &[0, 1, 2], 2)
                .unwrap()
                .to_string(),
            "x₁x₂ + x₁x₃ + x₂x₃"
        );
        assert_eq!(
            elementary_symmetric(&s3, &[0, 1], 2).unwrap().to_string(),
            "x₁x₂"
        );
        assert!(matches!(
            elementary_symmetric(&s3, &[0, 1], 3),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn complete_examples() {
        let s2 = space(2);
        assert_eq!(
            complete_homogeneous(&s2, &[0, 1], 2).unwrap().to_string(),
            "x₁² + x₁x₂ + x₂²"
        );
        assert_eq!(
            complete_homogeneous(&s2, &[1], 3).unwrap().to_string(),
            "x₂³"
        );
        assert_eq!(complete_homogeneous(&s2, &[], 0).unwrap().to_string(), "1");
        assert!(complete_homogeneous(&s2, &[], 2).unwrap().is_zero());
    }

    #[test]
    fn express_examples() {
        let s = space(2);
        let x1 = Series::variable(&s, 0);
        let x2 = Series::variable(&s, 1);
        let sum = x1.try_add(&x2).unwrap();
        assert_eq!(express_symmetric(&sum, &[0, 1]).unwrap().to_string(), "e₁");
        let squares = x1.pow(2).try_add(&x2.pow(2)).unwrap();
        let e = express_symmetric(&squares, &[0, 1]).unwrap();
        assert_eq!(e.to_string(), "e₁² - 2e₂");
        let back = e
            .compose_into(&s, &[sum.clone(), x1.try_mul(&x2).unwrap()])
            .unwrap();
        assert_eq!(back, squares);
        assert_eq!(
            express_symmetric(&x1.try_mul(&x2).unwrap(), &[0, 1])
                .unwrap()
                .to_string(),
            "e₂"
        );
    }

    #[test]
    fn asymmetric_input_names_a_transposition() {
        let s = space(3);
        let x1 = Series::variable(&s, 0);
        let x2 = Series::variable(&s, 1);
        let x = x1.try_add(&x2).unwrap();
        match express_symmetric(&x, &[0, 1, 2]) {
            Err(Error::Symmetry { witness }) => assert_eq!(witness, "(x₂ x₃)"),
            other => panic!("unexpected {other:?}"),
        }
    }
}
