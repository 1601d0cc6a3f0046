//! The `compute` verb: exact objects as JSON values, CSV rows and text.

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::ring::rational_string;
use crate::algebra::series::XSeries;
use crate::algebra::{Poly, Rational};
use crate::asymptotics::{build_l_operators, expand_logf, solve_phi_recursion, LPoly};
use crate::conjecture::{compute_pk, ek, interpolate_all};
use crate::error::{Error, Result};
use crate::mirror::{build_f, compute_ip_family};

use super::output::{render_objects, ComputeDocument};
use super::ComputeArgs;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Object {
    /// Coefficients of 𝔽 in x, as rational functions of w.
    #[value(name = "F")]
    #[serde(rename = "F")]
    F,
    /// The series I_0 … I_{n-1}.
    #[value(name = "Ip")]
    #[serde(rename = "Ip")]
    Ip,
    /// The series H_0 … H_n.
    #[value(name = "Hp")]
    #[serde(rename = "Hp")]
    Hp,
    /// μ and μ_0 … μ_smax from the expansion of log 𝔽.
    #[value(name = "mu")]
    #[serde(rename = "mu")]
    Mu,
    /// Φ_0 … Φ_smax as Laurent polynomials in L.
    #[value(name = "phi")]
    #[serde(rename = "phi")]
    Phi,
    /// The operators 𝕃_1 … 𝕃_kmax.
    #[value(name = "Lk")]
    #[serde(rename = "Lk")]
    Lk,
    /// P_0 … P_kmax, numeric in n with `--n`, else interpolated in n.
    #[value(name = "Pk")]
    #[serde(rename = "Pk")]
    Pk,
    /// The polynomials e_k(X).
    #[value(name = "ek")]
    #[serde(rename = "ek")]
    Ek,
}

/// One CSV row: `value` is the coefficient of `exponent` in entry `index`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub object: String,
    pub index: String,
    pub exponent: i64,
    pub value: String,
}

/// Parameters of a computation, defaults already applied.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ComputeRequest {
    pub n: Option<u32>,
    pub k: Option<usize>,
    pub order: usize,
    pub smax: usize,
    pub kmax: usize,
}

/// The three renderings of one computed object.
#[derive(Clone, Debug, Default)]
pub struct Computed {
    pub json: Vec<Value>,
    pub records: Vec<Record>,
    pub lines: Vec<String>,
}

impl Computed {
    fn rows(&mut self, object: &str, index: impl ToString, coeffs: impl IntoIterator<Item = (i64, Rational)>) {
        let index = index.to_string();
        for (e, c) in coeffs {
            self.records.push(Record {
                object: object.into(),
                index: index.clone(),
                exponent: e,
                value: rational_string(&c),
            });
        }
    }
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(rational_string).collect()
}

fn dense(v: &[Rational]) -> impl Iterator<Item = (i64, Rational)> + '_ {
    v.iter().enumerate().map(|(i, c)| (i as i64, c.clone()))
}

fn series_text(s: &XSeries<Rational>) -> String {
    format!("{} + O(x^{})", Poly::new(s.coeffs().to_vec()).render("x"), s.order() + 1)
}

fn lpoly_terms(p: &LPoly) -> Vec<Value> {
    p.terms()
        .iter()
        .map(|(e, c)| json!({"L": e, "coeff": rational_string(c)}))
        .collect()
}

fn need_n(req: &ComputeRequest) -> Result<u32> {
    match req.n {
        Some(n) if n >= 1 => Ok(n),
        Some(n) => Err(Error::InvalidInput(format!("n must be at least 1, got {n}"))),
        None => Err(Error::InvalidInput("this object needs --n".into())),
    }
}

fn series_object(out: &mut Computed, name: &str, label: &str, n: u32, list: &[XSeries<Rational>]) {
    for (p, s) in list.iter().enumerate() {
        out.json.push(json!({"object": name, "n": n, "index": p, "coeffs": strings(s.coeffs())}));
        out.rows(name, p, dense(s.coeffs()));
        out.lines.push(format!("{label}_{p} = {}", series_text(s)));
    }
}

/// Computes `object` for `req`.
pub fn compute_object(object: Object, req: &ComputeRequest) -> Result<Computed> {
    let mut out = Computed::default();
    match object {
        Object::F => {
            let n = need_n(req)?;
            let f = build_f(n, req.order)?;
            for d in 0..=req.order {
                let c = f.coeff(d);
                out.json.push(json!({
                    "object": "F", "n": n, "index": d,
                    "numer": strings(c.numer().coeffs()),
                    "denom": strings(c.denom().coeffs()),
                }));
                out.rows("F.numer", d, dense(c.numer().coeffs()));
                out.rows("F.denom", d, dense(c.denom().coeffs()));
                out.lines.push(format!("x^{d}: {}", c.render("w")));
            }
        }
        Object::Ip | Object::Hp => {
            let n = need_n(req)?;
            let fam = compute_ip_family(n, req.order)?;
            if object == Object::Ip {
                series_object(&mut out, "Ip", "I", n, &fam.i);
            } else {
                series_object(&mut out, "Hp", "H", n, &fam.h);
            }
        }
        Object::Mu => {
            let n = need_n(req)?;
            let e = expand_logf(n, req.order, req.smax)?;
            out.json.push(json!({"object": "mu", "n": n, "index": "mu", "coeffs": strings(e.mu.coeffs())}));
            out.rows("mu", "mu", dense(e.mu.coeffs()));
            out.lines.push(format!("mu = {}", series_text(&e.mu)));
            for (j, s) in e.mus.iter().enumerate() {
                out.json.push(json!({"object": "mu", "n": n, "index": j, "coeffs": strings(s.coeffs())}));
                out.rows("mu", j, dense(s.coeffs()));
                out.lines.push(format!("mu_{j} = {}", series_text(s)));
            }
        }
        Object::Phi => {
            let n = need_n(req)?;
            let phis = solve_phi_recursion(n, req.smax)?;
            for (s, p) in phis.iter().enumerate() {
                let series = p.to_xseries(n, req.order)?;
                out.json.push(json!({
                    "object": "phi", "n": n, "s": s,
                    "terms": lpoly_terms(p),
                    "series": strings(series.coeffs()),
                }));
                out.rows("phi", s, p.terms().iter().map(|(e, c)| (*e, c.clone())));
                out.lines.push(format!("Phi_{s} = {}", p.render()));
            }
        }
        Object::Lk => {
            let n = need_n(req)?;
            let ops = build_l_operators(n)?;
            for op in ops.iter().filter(|o| o.k >= 1 && o.k <= req.kmax) {
                let coeffs: Vec<Vec<String>> = op.coeffs.iter().map(|c| strings(c.coeffs())).collect();
                out.json.push(json!({"object": "Lk", "n": n, "k": op.k, "d_coeffs": coeffs}));
                for (i, c) in op.coeffs.iter().enumerate() {
                    out.rows("Lk", format!("{}:{i}", op.k), dense(c.coeffs()));
                }
                out.lines.push(format!("L_{} = {}", op.k, op.render()));
            }
        }
        Object::Pk => match req.n {
            Some(_) => {
                let n = need_n(req)?;
                for fit in compute_pk(n, req.kmax, req.order, None)? {
                    out.json.push(json!({"object": "Pk", "n": n, "k": fit.k, "coeffs": strings(&fit.coeffs)}));
                    out.rows("Pk", fit.k, dense(&fit.coeffs));
                    out.lines.push(format!("P_{} = {}", fit.k, Poly::new(fit.coeffs.clone()).render("X")));
                }
            }
            None => {
                let top = 14.max(2 * req.kmax as u32 + 4);
                let ns: Vec<u32> = (3..=top).collect();
                let run = interpolate_all(req.kmax, &ns, req.order.max(req.kmax + 6), None)?;
                for pk in &run.pks {
                    let mut v = serde_json::to_value(pk).map_err(|e| Error::InvalidInput(e.to_string()))?;
                    v["object"] = json!("Pk");
                    out.json.push(v);
                    for (j, c) in pk.coeffs.iter().enumerate() {
                        out.rows("Pk", format!("{}:{j}", pk.k), dense(c.coeffs()));
                    }
                    out.lines.push(format!("P_{} = {}", pk.k, pk.render()));
                }
            }
        },
        Object::Ek => {
            let ks: Vec<usize> = match req.k {
                Some(0) => return Err(Error::InvalidInput("e_k needs k >= 1".into())),
                Some(k) => vec![k],
                None => (1..=req.kmax).collect(),
            };
            for k in ks {
                let p = ek(k);
                let mut c = p.coeffs().to_vec();
                c.resize(k + 1, Rational::from_integer(0.into()));
                out.json.push(json!({"object": "ek", "k": k, "coeffs": strings(&c)}));
                out.rows("ek", k, dense(&c));
                out.lines.push(format!("e_{k} = {}", p.render("X")));
            }
        }
    }
    Ok(out)
}

fn defaults(object: Object) -> (usize, usize, usize) {
    // (order, smax, kmax)
    match object {
        Object::F => (6, 0, 0),
        Object::Ip | Object::Hp => (10, 0, 0),
        Object::Mu => (8, 3, 0),
        Object::Phi => (8, 3, 0),
        Object::Lk => (0, 0, 4),
        Object::Pk => (12, 0, 5),
        Object::Ek => (0, 0, 7),
    }
}

pub(super) fn cmd_compute(args: &ComputeArgs) -> std::result::Result<(String, i32), String> {
    let c = &args.common;
    if c.n_range.is_some() {
        return Err("compute takes a single --n".into());
    }
    let (order, smax, kmax) = defaults(args.object);
    let req = ComputeRequest {
        n: c.n,
        k: args.k,
        order: c.order_override()?.unwrap_or(order),
        smax: c.smax.unwrap_or(smax),
        kmax: c.kmax.unwrap_or(kmax),
    };
    let computed = compute_object(args.object, &req).map_err(|e| e.to_string())?;
    let doc = ComputeDocument::new(args, &req, computed);
    Ok((render_objects(&doc, c.format), super::EXIT_OK))
}
