//! JSON encodings shared by every subcommand. Rationals are `"p/q"` strings.

use mvwb_core::combinatorics::SliceCombinatorics;
use mvwb_core::crystal::{Monomial, VertexChoice};
use mvwb_core::rational::{encode, Rational};
use mvwb_core::{Multiset, Partition, Report, RowTableau, Series, SliceMatrix, SlicePoint};
use serde_json::{json, Value};

pub fn rational(q: &Rational) -> Value {
    Value::String(encode(q))
}

pub fn multiset(m: &Multiset) -> Value {
    m.runs().iter().map(|(v, k)| json!({"v": encode(v), "mult": k})).collect()
}

pub fn partition(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn series(s: &Series) -> Value {
    json!({
        "var": s.var().name(),
        "lead": s.top(),
        "coeffs": s.raw_coeffs().iter().map(rational).collect::<Vec<_>>(),
        "order": s.order(),
    })
}

pub fn combinatorics(c: &SliceCombinatorics) -> Value {
    json!({
        "n": c.n,
        "lambda": c.lambda,
        "mu": c.mu,
        "N": c.big_n,
        "m": c.m,
        "m_prime": c.m_prime,
        "m_double_prime": c.m_double_prime,
        "tau": partition(&c.tau),
        "pi": c.pi,
    })
}

pub fn slice_point(g: &SlicePoint) -> Value {
    let n = g.n();
    let a: Vec<Vec<Value>> = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| g.entry(i, j).iter().map(|(r, v)| json!({"r": r, "v": encode(v)})).collect())
                .collect()
        })
        .collect();
    json!({"n": n, "lambda": g.comb.lambda, "mu": g.comb.mu, "a": a})
}

pub fn slice_matrix(x: &SliceMatrix) -> Value {
    let entries: Vec<Vec<Value>> = x.entries.iter().map(|row| row.iter().map(rational).collect()).collect();
    json!({"pi": x.pi, "entries": entries})
}

pub fn report(r: &Report) -> Value {
    let failures: Vec<Value> = r
        .failures
        .iter()
        .map(|f| json!({"seed": f.seed, "location": f.location, "lhs": f.lhs, "rhs": f.rhs}))
        .collect();
    json!({"check": r.check, "instances": r.instances, "failures": failures})
}

pub fn monomial(p: &Monomial) -> Value {
    let factors: Vec<Value> = p.factors().map(|(i, k, e)| json!({"i": i, "k": encode(k), "e": e})).collect();
    json!({"factors": factors})
}

pub fn assignment(a: &[VertexChoice]) -> Value {
    a.iter().map(|v| json!({"i": v.i, "c": encode(&v.c), "partition": partition(&v.xi)})).collect()
}

pub fn tableau(t: &RowTableau) -> Value {
    let rows: Vec<Vec<Value>> = t.rows().iter().map(|r| r.iter().map(rational).collect()).collect();
    json!({"shape": t.shape(), "rows": rows})
}

#[cfg(test)]
mod tests {
    use super::*;
    use mvwb_core::rational::{frac, int};

    #[test]
    fn scalar_encodings() {
        assert_eq!(rational(&frac(-3, 6)), json!("-1/2"));
        assert_eq!(rational(&int(4)), json!("4/1"));
        let m: Multiset = [int(1), int(1), frac(1, 2)].into_iter().collect();
        assert_eq!(multiset(&m), json!([{"v": "1/2", "mult": 1}, {"v": "1/1", "mult": 2}]));
        assert_eq!(partition(&Partition::from_parts([1, 3, 0])), json!([3, 1]));
    }

    #[test]
    fn combinatorics_example() {
        let c = SliceCombinatorics::derive(3, &[1, 1], &[0, 0]).unwrap();
        let v = combinatorics(&c);
        assert_eq!(v["N"], json!(3));
        assert_eq!(v["tau"], json!([2, 1]));
        assert_eq!(v["pi"], json!([1, 1, 1]));
    }

    #[test]
    fn monomial_and_tableau() {
        let p = Monomial::from_factors([(1, int(1), 1), (1, int(3), -1)]);
        assert_eq!(monomial(&p), json!({"factors": [{"i": 1, "k": "1/1", "e": 1}, {"i": 1, "k": "3/1", "e": -1}]}));
        let t = RowTableau::new(&[1, 1], vec![Multiset::singleton(int(3)), Multiset::singleton(int(1))]).unwrap();
        assert_eq!(tableau(&t), json!({"shape": [1, 1], "rows": [["3/1"], ["1/1"]]}));
    }
}
