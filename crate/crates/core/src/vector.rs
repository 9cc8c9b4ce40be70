//! Dense coordinate vectors over [`Scalar`].

use crate::scalar::Scalar;

pub fn zeros(n: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); n]
}

/// The `i`-th standard basis vector of length `n`.
pub fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zeros(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| -x).collect()
}

pub fn scale(c: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| c * x).collect()
}

/// `acc += c * a`, skipping zero terms.
pub fn axpy(acc: &mut [Scalar], c: &Scalar, a: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (x, y) in acc.iter_mut().zip(a) {
        if !y.is_zero() {
            *x += c * y;
        }
    }
}

/// Sum of `terms`, each a signed vector.
pub fn combine<'a>(n: usize, terms: impl IntoIterator<Item = (i64, &'a [Scalar])>) -> Vec<Scalar> {
    let mut acc = zeros(n);
    for (sign, v) in terms {
        axpy(&mut acc, &Scalar::from_int(sign), v);
    }
    acc
}

/// Renders `Σ coords[i] * basis[i]`, e.g. `-6*e4` or `x1 - 2*x4`.
pub fn render_combination(coords: &[Scalar], basis: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in coords.iter().zip(basis) {
        if c.is_zero() {
            continue;
        }
        let term = if c.is_one() {
            name.clone()
        } else if (-c).is_one() {
            format!("-{name}")
        } else {
            let text = c.to_string();
            let compound = matches!(c, Scalar::Laurent(p) if p.num_terms() > 1);
            if compound {
                format!("({text})*{name}")
            } else {
                format!("{text}*{name}")
            }
        };
        if out.is_empty() {
            out = term;
        } else if let Some(rest) = term.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&term);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{parse_scalar, Ring};

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("e{i}")).collect()
    }

    #[test]
    fn renders_combinations() {
        let v = vec![Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::from_int(-6)];
        assert_eq!(render_combination(&v, &names(4)), "-6*e4");
        let v = vec![Scalar::one(), Scalar::from_int(-1), Scalar::from_ratio(3, 2)];
        assert_eq!(render_combination(&v, &names(3)), "e1 - e2 + 3/2*e3");
        assert_eq!(render_combination(&zeros(2), &names(2)), "0");
        let r = Ring::new(["a", "b"]).unwrap();
        let v = vec![parse_scalar("a - b", &r).unwrap(), parse_scalar("-a", &r).unwrap()];
        assert_eq!(render_combination(&v, &names(2)), "(a - b)*e1 - a*e2");
    }
}
