use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use vcw_core::{
    alternation_count, boolean_combo, certify_id_at_most_one, combo_component_bound, density_fit, density_points,
    gen_cyclic, gen_grid, gen_linear, gen_predicates, gen_random_id1, gen_reduct_order, generic_corners,
    independence_dimension, ladder_index, leftward_ray, order_id1, order_laminar, parse_family, rank1_report,
    trace_table, type_count, verify_convex_order, DensityEstimate, Error, LinearOrder, PredicateMode, RandomId1,
    Rank1Scheme, SetFamily,
};

use crate::args::{Cli, GenArgs, GenKind, Mode, OrderMode, Verb};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_PRECONDITION: u8 = 3;
pub const EXIT_CAP: u8 = 4;

pub struct Outcome {
    pub code: u8,
    pub body: Option<Value>,
    pub message: Option<String>,
    pub output_file: Option<PathBuf>,
}

impl Outcome {
    fn ok(body: Value) -> Self {
        Outcome {
            code: EXIT_OK,
            body: Some(body),
            message: None,
            output_file: None,
        }
    }

    fn with(code: u8, body: Value, message: impl Into<String>) -> Self {
        Outcome {
            code,
            body: Some(body),
            message: Some(message.into()),
            output_file: None,
        }
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        let message = e.to_string();
        let (code, body) = match &e {
            Error::IdExceedsOne(w) => (EXIT_PRECONDITION, Some(json!({ "error": message, "witness": w }))),
            Error::NotLaminar(p) => (EXIT_PRECONDITION, Some(json!({ "error": message, "crossing": p }))),
            Error::ComponentBound { member, components, k } => (
                EXIT_PRECONDITION,
                Some(json!({ "error": message, "member": member, "components": components, "k": k })),
            ),
            Error::EmptyFamily => (EXIT_PRECONDITION, Some(json!({ "error": message }))),
            Error::CapExceeded { .. } => (EXIT_CAP, None),
            _ => (EXIT_INVALID, None),
        };
        Outcome {
            code,
            body,
            message: Some(message),
            output_file: None,
        }
    }
}

type Fail = Box<Outcome>;
type Run = std::result::Result<Outcome, Fail>;

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Box::new(e.into())
    }
}

fn input_error(msg: impl Into<String>) -> Fail {
    Box::new(Outcome {
        code: EXIT_INVALID,
        body: None,
        message: Some(msg.into()),
        output_file: None,
    })
}

fn read_text(path: Option<&Path>) -> std::result::Result<String, Fail> {
    let mut text = String::new();
    let read = match path {
        Some(p) => fs::read_to_string(p).map(|t| text = t),
        None => io::stdin().read_to_string(&mut text).map(|_| ()),
    };
    read.map_err(|e| {
        let source = path.map_or("standard input".to_string(), |p| p.display().to_string());
        input_error(format!("cannot read {source}: {e}"))
    })?;
    Ok(text)
}

fn load_family(cli: &Cli) -> std::result::Result<SetFamily, Fail> {
    let text = read_text(cli.input.as_deref())?;
    let family = parse_family(&text)?;
    Ok(if cli.dedupe { family.dedupe() } else { family })
}

/// An order file holds a list of element names, or an object whose `order`
/// key holds one (the output of `vcw order`).
fn load_order(path: &Path, family: &SetFamily) -> std::result::Result<LinearOrder, Fail> {
    let text = read_text(Some(path))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| input_error(format!("order file: {e}")))?;
    let list = match &value {
        Value::Array(a) => a,
        Value::Object(o) => match o.get("order") {
            Some(Value::Array(a)) => a,
            _ => return Err(input_error("order file: object has no `order` list")),
        },
        _ => return Err(input_error("order file: expected a list of element names")),
    };
    let names = list
        .iter()
        .map(|v| {
            v.as_str()
                .ok_or_else(|| input_error("order file: element names must be strings"))
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(LinearOrder::from_names(family.universe(), &names)?)
}

fn element_names(family: &SetFamily, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| family.universe().name(x).to_string()).collect()
}

fn member_names(family: &SetFamily, js: &[usize]) -> Vec<String> {
    js.iter().map(|&j| family.member(j).name.clone()).collect()
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report types serialize")
}

pub fn execute(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(o) => o,
        Err(o) => *o,
    }
}

fn dispatch(cli: &Cli) -> Run {
    if let Verb::Gen(args) = &cli.verb {
        return generate(cli, args);
    }
    let family = load_family(cli)?;
    let f = &family;
    match &cli.verb {
        Verb::Iddim => {
            let r = independence_dimension(f, cli.cap);
            let mut body = to_value(&r);
            body["witness_names"] = json!(member_names(f, &r.witness));
            if r.capped {
                return Ok(Outcome::with(
                    EXIT_CAP,
                    body,
                    format!("search stopped at cap {}", cli.cap),
                ));
            }
            Ok(Outcome::ok(body))
        }
        Verb::Certify => Ok(Outcome::ok(match certify_id_at_most_one(f) {
            Ok(()) => json!({ "certified": true }),
            Err(w) => json!({ "certified": false, "witness": w }),
        })),
        Verb::Order { mode } => {
            let (order, report) = match mode {
                OrderMode::Laminar => {
                    let o = order_laminar(f)?;
                    let r = verify_convex_order(f, &o, false)?;
                    (o, r)
                }
                OrderMode::Id1 => order_id1(f)?,
            };
            Ok(Outcome::ok(
                json!({ "order": order.names(f.universe()), "report": report }),
            ))
        }
        Verb::Verify {
            order,
            allow_complement,
        } => {
            let o = load_order(order, f)?;
            let r = verify_convex_order(f, &o, *allow_complement)?;
            Ok(Outcome::ok(json!({
                "members": r,
                "max_components": r.max_components(),
                "convex": r.is_convex(),
            })))
        }
        Verb::Types => {
            let t = trace_table(f);
            Ok(Outcome::ok(
                json!({ "count": type_count(&t), "types": t.distinct_bitstrings() }),
            ))
        }
        Verb::Density { schedule } => {
            let points = density_points(f, schedule)?;
            let est: DensityEstimate = density_fit(&points)?;
            Ok(Outcome::ok(to_value(&est)))
        }
        Verb::Ladder => {
            let r = ladder_index(f, cli.cap);
            let body = json!({
                "length": r.length,
                "capped": r.capped,
                "witness": {
                    "row_elements": element_names(f, &r.witness.row_elements),
                    "col_members": member_names(f, &r.witness.col_members),
                },
            });
            if r.capped {
                return Ok(Outcome::with(
                    EXIT_CAP,
                    body,
                    format!("search stopped at cap {}", cli.cap),
                ));
            }
            Ok(Outcome::ok(body))
        }
        Verb::Udtfs1 { element: None } => {
            let r = rank1_report(f);
            let body = to_value(&r);
            if !r.certified {
                return Ok(Outcome::with(
                    EXIT_PRECONDITION,
                    body,
                    "family has independence dimension > 1",
                ));
            }
            Ok(Outcome::ok(body))
        }
        Verb::Udtfs1 { element: Some(name) } => {
            let x = f
                .universe()
                .index_of(name)
                .ok_or_else(|| Error::UnknownElementName(name.clone()))?;
            let scheme = Rank1Scheme::new(f)?;
            let trace = scheme.trace(x).ok_or(Error::EmptyFamily)?;
            Ok(Outcome::ok(to_value(&trace)))
        }
        Verb::Combo { expr, order } => {
            let mask = boolean_combo(f, expr)?;
            let mut body = json!({
                "elements": f.universe().names_of(&mask),
                "bitstring": mask.to_bitstring(),
            });
            if let Some(path) = order {
                let o = load_order(path, f)?;
                let b = combo_component_bound(f, &o, expr)?;
                body["k"] = json!(b.k);
                body["components"] = json!(b.components);
                body["bound"] = json!(b.bound);
                body["holds"] = json!(b.holds());
            }
            Ok(Outcome::ok(body))
        }
        Verb::Ray { n, order, set } => {
            let j = f.index_of(set).ok_or_else(|| Error::UnknownMember(set.clone()))?;
            let o = load_order(order, f)?;
            let ray = leftward_ray(&o, f.mask(j), *n)?;
            Ok(Outcome::ok(json!({
                "set": set,
                "n": n,
                "alternations": alternation_count(&o, f.mask(j))?,
                "ray": f.universe().names_of(&ray),
            })))
        }
        Verb::Gen(_) => unreachable!("handled above"),
    }
}

fn parse_list(text: &str, sep: char, what: &str) -> std::result::Result<Vec<usize>, Fail> {
    text.split(sep)
        .map(|s| s.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| input_error(format!("{what} {text:?}: {e}")))
}

fn generate(cli: &Cli, args: &GenArgs) -> Run {
    let family = match &args.kind {
        GenKind::Linear { m, cuts } => gen_linear(*m, cuts)?,
        GenKind::Grid { n, m, corners, count } => {
            let corners = match (corners, count) {
                (Some(text), _) => text
                    .split(';')
                    .filter(|s| !s.trim().is_empty())
                    .map(|c| parse_list(c, ',', "corner"))
                    .collect::<std::result::Result<Vec<_>, _>>()?,
                (None, Some(count)) => generic_corners(*n, *m, *count, cli.seed)?,
                (None, None) => Vec::new(),
            };
            gen_grid(*n, *m, &corners)?
        }
        GenKind::Cyclic { m, arcs } => {
            let arcs = arcs
                .iter()
                .map(|a| match parse_list(a, ':', "arc")?.as_slice() {
                    [b, c] => Ok((*b, *c)),
                    _ => Err(input_error(format!("arc {a:?} must be b:c"))),
                })
                .collect::<std::result::Result<Vec<_>, _>>()?;
            gen_cyclic(*m, &arcs)?
        }
        GenKind::Predicates { k, mode, m } => {
            let mode = match mode {
                Mode::Independent => PredicateMode::Independent,
                Mode::Nested => PredicateMode::Nested,
            };
            gen_predicates(*k, mode, *m)?
        }
        GenKind::RandomId1 {
            depth,
            flips,
            points,
            max_members,
        } => {
            let mut p = RandomId1::new(cli.seed, *depth, *flips);
            p.points = *points;
            if let Some(cap) = max_members {
                p.max_members = *cap;
            }
            gen_random_id1(&p)?
        }
        GenKind::ReductOrder { m } => gen_reduct_order(*m)?,
    };
    let mut out = Outcome::ok(to_value(&family));
    out.output_file = args.output.clone();
    Ok(out)
}

/// Writes through a sibling temporary file and a rename.
pub fn write_atomically(path: &Path, text: &str) -> io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)
}
