//! The validate / polarize / induce / iso commands.

use serde_json::{json, Value};

use twind_core::analysis::{classify, find_intertwiner, Verdict};
use twind_core::induced::{induce, module_weights, Twist};
use twind_core::polarizations::{find_polarization, is_polarization, is_subordinate};
use twind_core::{form_of, rank_parity, Character, LieError, RankParity, Subspace};
use twind_core::superalgebra::LieSuperalgebra;

use crate::formats::{
    character_to_json, matrix_to_json, module_witnesses, parse_lambda, parse_pol,
    subspace_to_json, AlgebraFile, Certificate,
};

/// Command outcome: exit code by the stable contract (0 success,
/// 1 mathematical negative, 2 malformed input), human-readable rendering,
/// optional machine certificate.
pub struct Outcome {
    pub exit: i32,
    pub text: String,
    pub certificate: Option<Certificate>,
}

fn math_negative(text: String) -> Outcome {
    Outcome {
        exit: 1,
        text,
        certificate: None,
    }
}

/// Hint appended to field-extension obstructions.
fn render_math_error(e: &LieError) -> String {
    match e {
        LieError::NeedsFieldExtension { d } => format!(
            "{e}\nhint: re-run with --field \"rationals adjoin sqrt {d}\" (or set the algebra \
             file's field accordingly)"
        ),
        _ => e.to_string(),
    }
}

pub fn cmd_validate(doc: &AlgebraFile, g: &LieSuperalgebra) -> Outcome {
    let report = g.validate();
    let mut text = String::new();
    if report.is_valid() {
        text.push_str(&format!(
            "valid Lie superalgebra of dimension ({}|{})\n",
            g.even_dim(),
            g.odd_dim()
        ));
        let solvable = g.is_solvable();
        text.push_str(&format!("solvable: {solvable}\n"));
    } else {
        text.push_str(&format!(
            "INVALID: {} axiom violation(s)\n",
            report.violations.len()
        ));
        text.push_str(&report.render(g));
    }
    let cert = Certificate {
        certificate: "validate".into(),
        algebra: doc.clone(),
        inputs: json!({}),
        outputs: json!({
            "valid": report.is_valid(),
            "violations": report.violations.len(),
            "report": report.render(g).lines().collect::<Vec<_>>(),
        }),
        witnesses: json!({}),
    };
    Outcome {
        exit: if report.is_valid() { 0 } else { 1 },
        text,
        certificate: Some(cert),
    }
}

pub fn cmd_polarize(
    doc: &AlgebraFile,
    g: &LieSuperalgebra,
    lambda_text: &str,
) -> Result<Outcome, crate::formats::FormatError> {
    let values = parse_lambda(g, lambda_text)?;
    let lambda = match Character::in_l(g, values) {
        Ok(l) => l,
        Err(e) => {
            return Ok(math_negative(format!(
                "lambda is not a character in L: {}",
                render_math_error(&e)
            )))
        }
    };
    let f = form_of(g, &lambda).expect("membership already checked");
    let mut text = String::new();
    text.push_str(&format!("f_lambda gram matrix ({0}x{0}):\n", g.odd_dim()));
    text.push_str(&render_matrix(&f.gram));
    text.push_str(&format!(
        "rank {} ({}), radical dimension {}\n",
        f.rank,
        match rank_parity(&f) {
            RankParity::Even => "even: G-type predicted",
            RankParity::Odd => "odd: Q-type predicted",
        },
        f.radical.dim()
    ));
    if !f.radical.is_zero() {
        text.push_str(&format!("radical basis:\n{}", render_matrix(f.radical.basis())));
    }
    let pol = match find_polarization(g, &lambda) {
        Ok(p) => p,
        Err(e) => {
            return Ok(math_negative(format!(
                "no polarization over the working field: {}",
                render_math_error(&e)
            )))
        }
    };
    let theta = g.theta_char(&pol.odd_part).expect("polarizations are invariant");
    text.push_str(&format!(
        "polarization odd part (dim {}):\n{}",
        pol.odd_part.dim(),
        render_matrix(pol.odd_part.basis())
    ));
    match &pol.xi0 {
        Some(xi0) => text.push_str(&format!(
            "xi0 = {}\n",
            render_odd_vector(g, xi0)
        )),
        None => text.push_str("xi0: none (even rank)\n"),
    }
    text.push_str(&format!("theta = {}\n", theta.render(g)));
    let cert = Certificate {
        certificate: "polarize".into(),
        algebra: doc.clone(),
        inputs: json!({ "lambda": character_to_json(g, &lambda) }),
        outputs: json!({
            "rank": f.rank,
            "rank_parity": if f.rank % 2 == 0 { "even" } else { "odd" },
            "radical_dim": f.radical.dim(),
            "theta": character_to_json(g, &theta),
            "predicted_type": if f.rank % 2 == 0 { "G" } else { "Q" },
        }),
        witnesses: json!({
            "gram": matrix_to_json(&f.gram),
            "radical": subspace_to_json(&f.radical),
            "polarization": subspace_to_json(&pol.odd_part),
            "xi0": pol.xi0.as_ref().map(|v| Value::Array(
                v.iter().map(|s| Value::String(s.to_string())).collect()
            )).unwrap_or(Value::Null),
        }),
    };
    Ok(Outcome {
        exit: 0,
        text,
        certificate: Some(cert),
    })
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_induce(
    doc: &AlgebraFile,
    g: &LieSuperalgebra,
    lambda_text: &str,
    twist: Twist,
    pol_flag: Option<&str>,
    require_polarization: bool,
) -> Result<Outcome, crate::formats::FormatError> {
    let values = parse_lambda(g, lambda_text)?;
    let lambda = match Character::in_l(g, values) {
        Ok(l) => l,
        Err(e) => {
            return Ok(math_negative(format!(
                "lambda is not a character in L: {}",
                render_math_error(&e)
            )))
        }
    };
    let p: Subspace = match pol_flag {
        Some(flag) => parse_pol(g, flag)?,
        None => match find_polarization(g, &lambda) {
            Ok(pol) => pol.odd_part,
            Err(e) => {
                return Ok(math_negative(format!(
                    "no polarization over the working field: {}",
                    render_math_error(&e)
                )))
            }
        },
    };
    let check = match is_polarization(g, &lambda, &p) {
        Ok(c) => c,
        Err(e) => return Ok(math_negative(render_math_error(&e))),
    };
    if require_polarization && !check.ok() {
        return Ok(math_negative(format!(
            "given subspace is not a polarization: {}",
            check.defects().join(", ")
        )));
    }
    if !check.ok() {
        // Still has to be a subordinate-compatible subspace.
        match is_subordinate(g, &lambda, &p) {
            Ok(true) => {}
            Ok(false) => {
                return Ok(math_negative(
                    "given subspace is neither a polarization nor subordinate to lambda".into(),
                ))
            }
            Err(e) => return Ok(math_negative(render_math_error(&e))),
        }
    }
    let w = match induce(g, &lambda, &p, twist) {
        Ok(w) => w,
        Err(e) => return Ok(math_negative(render_math_error(&e))),
    };
    let mut text = String::new();
    text.push_str(&format!(
        "induced module: dimension ({}|{}), twist {}\n",
        w.dim_even(),
        w.dim_odd(),
        twist
    ));
    let weights = match module_weights(g, &w) {
        Ok(ws) => ws,
        Err(e) => return Ok(math_negative(render_math_error(&e))),
    };
    for entry in &weights {
        text.push_str(&format!(
            "weight {}  multiplicity {} (even {}, odd {})\n",
            entry.weight.render(g),
            entry.multiplicity,
            entry.even_mult,
            entry.odd_mult
        ));
    }
    let verdict = match classify(g, &w) {
        Ok(v) => v,
        Err(e) => return Ok(math_negative(render_math_error(&e))),
    };
    text.push_str(&format!(
        "verdict: {} (envelope dim {}, supercommutant ({}, {}))\n",
        verdict_name(&verdict.verdict),
        verdict.envelope_dim,
        verdict.supercommutant_even,
        verdict.supercommutant_odd
    ));
    if w.dim() <= 8 {
        for i in 0..g.dim() {
            text.push_str(&format!("action of {}:\n{}", g.name(i), render_matrix(w.action(i))));
        }
    } else {
        text.push_str("(action matrices omitted from the text view; see the certificate)\n");
    }
    let weights_json: Vec<Value> = weights
        .iter()
        .map(|e| {
            json!({
                "weight": character_to_json(g, &e.weight),
                "multiplicity": e.multiplicity,
                "even": e.even_mult,
                "odd": e.odd_mult,
            })
        })
        .collect();
    let cert = Certificate {
        certificate: "induce".into(),
        algebra: doc.clone(),
        inputs: json!({
            "lambda": character_to_json(g, &lambda),
            "twist": twist.to_string(),
            "polarization": subspace_to_json(&p),
            "is_polarization": check.ok(),
        }),
        outputs: json!({
            "dim_even": w.dim_even(),
            "dim_odd": w.dim_odd(),
            "weights": weights_json,
            "verdict": verdict_name(&verdict.verdict),
            "irreducible": verdict.is_irreducible(),
            "envelope_dim": verdict.envelope_dim,
            "supercommutant": [verdict.supercommutant_even, verdict.supercommutant_odd],
        }),
        witnesses: {
            let mut wjson = module_witnesses(g, &w);
            if let Some(sub) = &verdict.submodule_witness {
                wjson["proper_submodule"] = subspace_to_json(sub);
            }
            if let Some(od) = &verdict.odd_witness {
                wjson["odd_supercommuting_map"] = matrix_to_json(od);
            }
            wjson
        },
    };
    Ok(Outcome {
        exit: 0,
        text,
        certificate: Some(cert),
    })
}

pub fn cmd_iso(a: &Certificate, b: &Certificate) -> Result<Outcome, crate::formats::FormatError> {
    let (ga, ma) = a.load_module()?;
    let (gb, mb) = b.load_module()?;
    if AlgebraFile::from_algebra(&ga) != AlgebraFile::from_algebra(&gb) {
        return Ok(math_negative(
            "certificates come from different algebras: not comparable".into(),
        ));
    }
    if ma.dim() != mb.dim() {
        return Ok(Outcome {
            exit: 1,
            text: format!(
                "not isomorphic: dimensions differ ({} vs {})\n",
                ma.dim(),
                mb.dim()
            ),
            certificate: None,
        });
    }
    let report = find_intertwiner(&ma, &mb);
    let mut text = String::new();
    text.push_str(&format!(
        "even invertible intertwiner: {}\nodd invertible intertwiner: {}\n",
        report.exists_even, report.exists_odd
    ));
    text.push_str(&format!(
        "homomorphism space dims: even {}, odd {}\n",
        report.hom_dims.0, report.hom_dims.1
    ));
    if report.invertibility_undecided {
        text.push_str("note: nonzero homomorphisms exist but no invertible one was found in the search set\n");
    }
    let verdictline = if report.isomorphic_some_parity() {
        "isomorphic (possibly after a parity flip)\n"
    } else {
        "not isomorphic\n"
    };
    text.push_str(verdictline);
    let witness_json = report
        .witness
        .as_ref()
        .map(|(m, p)| {
            json!({
                "matrix": matrix_to_json(m),
                "parity": if p.is_odd() { 1 } else { 0 },
            })
        })
        .unwrap_or(Value::Null);
    let cert = Certificate {
        certificate: "iso".into(),
        algebra: a.algebra.clone(),
        inputs: json!({
            "left": a.outputs.clone(),
            "right": b.outputs.clone(),
        }),
        outputs: json!({
            "exists_even": report.exists_even,
            "exists_odd": report.exists_odd,
            "hom_dims": [report.hom_dims.0, report.hom_dims.1],
            "isomorphic": report.isomorphic_some_parity(),
        }),
        witnesses: json!({ "intertwiner": witness_json }),
    };
    Ok(Outcome {
        exit: if report.isomorphic_some_parity() { 0 } else { 1 },
        text,
        certificate: Some(cert),
    })
}

pub fn verdict_name(v: &Verdict) -> &'static str {
    match v {
        Verdict::GType => "G-type irreducible",
        Verdict::QType => "Q-type irreducible",
        Verdict::Reducible => "reducible",
        Verdict::Undecided => "undecided",
    }
}

pub fn render_matrix(m: &twind_core::Matrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        out.push_str("  [");
        for j in 0..m.cols() {
            if j > 0 {
                out.push_str(", ");
            }
            out.push_str(&m.at(i, j).to_string());
        }
        out.push_str("]\n");
    }
    if m.rows() == 0 {
        out.push_str("  (empty)\n");
    }
    out
}

fn render_odd_vector(g: &LieSuperalgebra, v: &[twind_core::Scalar]) -> String {
    let terms: Vec<String> = g
        .odd_indices()
        .iter()
        .enumerate()
        .filter(|(pos, _)| !v[*pos].is_zero())
        .map(|(pos, &i)| format!("{}·{}", v[pos], g.name(i)))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}
