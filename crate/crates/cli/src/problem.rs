//! Problem-file runner: a JSON document declaring a ring, named objects
//! (ideals, monomial ideals, modules), and a list of tasks to run against
//! them. Schema violations are reported with a JSON pointer to the
//! offending location. The document format is versioned; see
//! `docs/problemfile.schema.json`.

use crate::cache;
use crate::{report_outcome, Global, Outcome, Status};
use icl_core::bourbaki::{
    fitting_ideal, generic_bourbaki_ideal, is_contracted_module, is_integrally_closed_module,
    nu_module, order_module, FModule,
};
use icl_core::groebner::{
    colength_0dim, eliminate, ideal_intersect, ideal_quotient, krull_dim, Ideal,
};
use icl_core::modgb::ModElem;
use icl_core::monomial_ideal::{monomial_closure_power, MonomialIdeal};
use icl_core::rees::{
    is_integral_element, is_reduction, multiplicity_2d, rees_presentation, GenericMode,
    IntegralityResult, ReductionResult,
};
use icl_core::rlr2::{
    base_points, integral_closure_2d, is_contracted, is_integrally_closed_2d, nu_local,
    order_local, LocalIdeal2D, DEFAULT_DEPTH,
};
use icl_core::verify::{verify_itoh, verify_product_closure, verify_radical, verify_specialization};
use icl_core::{
    parse_polynomial, CoeffField, Error, Monomial, MonomialOrder, Result, Ring, RingContext,
};
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;
use std::path::Path;

fn schema(pointer: &str, msg: &str) -> Error {
    Error::Schema {
        pointer: pointer.to_string(),
        msg: msg.to_string(),
    }
}

fn as_object<'a>(v: &'a Value, ptr: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| schema(ptr, "expected an object"))
}

fn as_array<'a>(v: &'a Value, ptr: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| schema(ptr, "expected an array"))
}

fn as_str<'a>(v: &'a Value, ptr: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| schema(ptr, "expected a string"))
}

fn get<'a>(obj: &'a Map<String, Value>, key: &str, ptr: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| schema(&format!("{ptr}/{key}"), "missing required field"))
}

enum Obj {
    Ideal(Ideal),
    Monomial(MonomialIdeal),
    Module(FModule),
}

fn parse_ring_obj(v: &Value) -> Result<Ring> {
    let obj = as_object(v, "/ring")?;
    let vars = as_array(get(obj, "vars", "/ring")?, "/ring/vars")?
        .iter()
        .enumerate()
        .map(|(i, v)| Ok(as_str(v, &format!("/ring/vars/{i}"))?.to_string()))
        .collect::<Result<Vec<_>>>()?;
    let field = match as_str(get(obj, "field", "/ring")?, "/ring/field")? {
        "Q" => CoeffField::Q,
        f => match f.strip_prefix("Fp:") {
            Some(p) => CoeffField::Fp(
                p.parse()
                    .map_err(|_| schema("/ring/field", "bad prime after Fp:"))?,
            ),
            None => return Err(schema("/ring/field", "expected \"Q\" or \"Fp:<prime>\"")),
        },
    };
    RingContext::new(vars, field, MonomialOrder::GrevLex)
}

fn parse_object(ring: &Ring, name: &str, v: &Value) -> Result<Obj> {
    let ptr = format!("/objects/{name}");
    let obj = as_object(v, &ptr)?;
    if let Some(g) = obj.get("gens") {
        let gptr = format!("{ptr}/gens");
        let polys = as_array(g, &gptr)?
            .iter()
            .enumerate()
            .map(|(i, s)| parse_polynomial(as_str(s, &format!("{gptr}/{i}"))?, ring))
            .collect::<Result<Vec<_>>>()?;
        return Ok(Obj::Ideal(Ideal::new(ring, polys)));
    }
    if let Some(g) = obj.get("monomial_gens") {
        let gptr = format!("{ptr}/monomial_gens");
        let mut mons = Vec::new();
        for (i, row) in as_array(g, &gptr)?.iter().enumerate() {
            let rptr = format!("{gptr}/{i}");
            let exps = as_array(row, &rptr)?
                .iter()
                .enumerate()
                .map(|(j, e)| {
                    e.as_u64()
                        .and_then(|n| u32::try_from(n).ok())
                        .ok_or_else(|| schema(&format!("{rptr}/{j}"), "expected an exponent"))
                })
                .collect::<Result<Vec<_>>>()?;
            if exps.len() != ring.nvars() {
                return Err(schema(&rptr, "exponent vector length must match ring"));
            }
            mons.push(Monomial(exps));
        }
        return Ok(Obj::Monomial(MonomialIdeal::new(ring, mons)));
    }
    if let Some(c) = obj.get("columns") {
        let cptr = format!("{ptr}/columns");
        let cols: Vec<ModElem> = as_array(c, &cptr)?
            .iter()
            .enumerate()
            .map(|(i, col)| {
                let colptr = format!("{cptr}/{i}");
                as_array(col, &colptr)?
                    .iter()
                    .enumerate()
                    .map(|(j, s)| {
                        parse_polynomial(as_str(s, &format!("{colptr}/{j}"))?, ring)
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let e = cols
            .first()
            .map(|c| c.len())
            .ok_or_else(|| schema(&cptr, "at least one column required"))?;
        return Ok(Obj::Module(FModule::new(ring, e, cols)?));
    }
    Err(schema(
        &ptr,
        "object needs one of: gens, monomial_gens, columns",
    ))
}

fn gens_of(i: &Ideal) -> Vec<String> {
    i.gens.iter().map(|p| p.to_string()).collect()
}

struct TaskCx<'a> {
    g: &'a Global,
    ring: &'a Ring,
    objects: &'a BTreeMap<String, Obj>,
}

impl<'a> TaskCx<'a> {
    fn target(&self, t: &Map<String, Value>, ptr: &str) -> Result<&'a Obj> {
        let name = as_str(get(t, "target", ptr)?, &format!("{ptr}/target"))?;
        self.objects
            .get(name)
            .ok_or_else(|| schema(&format!("{ptr}/target"), "unknown object name"))
    }

    fn target_ideal(&self, t: &Map<String, Value>, ptr: &str) -> Result<Ideal> {
        match self.target(t, ptr)? {
            Obj::Ideal(i) => Ok(i.clone()),
            Obj::Monomial(m) => Ok(m.to_ideal()),
            Obj::Module(_) => Err(schema(&format!("{ptr}/target"), "expected an ideal")),
        }
    }

    fn target_module(&self, t: &Map<String, Value>, ptr: &str) -> Result<FModule> {
        match self.target(t, ptr)? {
            Obj::Module(m) => Ok(m.clone()),
            _ => Err(schema(&format!("{ptr}/target"), "expected a module")),
        }
    }

    fn other_ideal(&self, t: &Map<String, Value>, key: &str, ptr: &str) -> Result<Ideal> {
        let name = as_str(get(t, key, ptr)?, &format!("{ptr}/{key}"))?;
        match self.objects.get(name) {
            Some(Obj::Ideal(i)) => Ok(i.clone()),
            Some(Obj::Monomial(m)) => Ok(m.to_ideal()),
            _ => Err(schema(&format!("{ptr}/{key}"), "expected an ideal name")),
        }
    }

    fn poly_arg(&self, t: &Map<String, Value>, key: &str, ptr: &str) -> Result<icl_core::Polynomial> {
        parse_polynomial(as_str(get(t, key, ptr)?, &format!("{ptr}/{key}"))?, self.ring)
    }

    fn run_task(&self, t: &Map<String, Value>, ptr: &str) -> Result<(Value, Status)> {
        let op = as_str(get(t, "op", ptr)?, &format!("{ptr}/op"))?;
        let out = match op {
            "gb" => {
                let i = self.target_ideal(t, ptr)?;
                let basis = cache::gb_cached(
                    self.g.cache.as_deref(),
                    &i,
                    MonomialOrder::GrevLex,
                )?;
                let strs: Vec<String> = basis.iter().map(|p| p.to_string()).collect();
                (json!({ "basis": strs }), Status::Ok)
            }
            "member" => {
                let i = self.target_ideal(t, ptr)?;
                let f = self.poly_arg(t, "f", ptr)?;
                (json!({ "member": i.contains_poly(&f)? }), Status::Ok)
            }
            "intersect" => {
                let r = ideal_intersect(
                    &self.target_ideal(t, ptr)?,
                    &self.other_ideal(t, "other", ptr)?,
                )?;
                (json!({ "generators": gens_of(&r) }), Status::Ok)
            }
            "quotient" => {
                let r = ideal_quotient(
                    &self.target_ideal(t, ptr)?,
                    &self.other_ideal(t, "other", ptr)?,
                )?;
                (json!({ "generators": gens_of(&r) }), Status::Ok)
            }
            "eliminate" => {
                let vars = as_array(get(t, "vars", ptr)?, &format!("{ptr}/vars"))?
                    .iter()
                    .enumerate()
                    .map(|(i, v)| Ok(as_str(v, &format!("{ptr}/vars/{i}"))?.to_string()))
                    .collect::<Result<Vec<_>>>()?;
                let r = eliminate(&self.target_ideal(t, ptr)?, &vars)?;
                (json!({ "generators": gens_of(&r) }), Status::Ok)
            }
            "dim" => (
                json!({ "dim": krull_dim(&self.target_ideal(t, ptr)?)? }),
                Status::Ok,
            ),
            "colength" => (
                json!({ "colength": colength_0dim(&self.target_ideal(t, ptr)?)? }),
                Status::Ok,
            ),
            "closure" => {
                let power = t
                    .get("power")
                    .map(|p| {
                        p.as_u64()
                            .and_then(|n| u32::try_from(n).ok())
                            .ok_or_else(|| schema(&format!("{ptr}/power"), "expected an integer"))
                    })
                    .transpose()?
                    .unwrap_or(1);
                let c = match self.target(t, ptr)? {
                    Obj::Monomial(m) => monomial_closure_power(m, power)?.to_ideal(),
                    Obj::Ideal(i) if i.is_monomial() => {
                        monomial_closure_power(&MonomialIdeal::from_ideal(i)?, power)?.to_ideal()
                    }
                    Obj::Ideal(i) => integral_closure_2d(
                        &LocalIdeal2D::new(i.power(power))?,
                        self.g.seed,
                        DEFAULT_DEPTH,
                    )?,
                    Obj::Module(_) => {
                        return Err(schema(&format!("{ptr}/target"), "expected an ideal"))
                    }
                };
                (json!({ "generators": gens_of(&c) }), Status::Ok)
            }
            "reduction" => {
                let i = self.target_ideal(t, ptr)?;
                let u = self.other_ideal(t, "sub", ptr)?;
                match is_reduction(&u, &i, self.g.cap)? {
                    ReductionResult::Yes(n) => {
                        (json!({ "reduction": true, "power": n }), Status::Ok)
                    }
                    ReductionResult::NoUpTo(c) => (
                        json!({ "reduction": false, "cap": c }),
                        Status::Inconclusive,
                    ),
                }
            }
            "integral-test" => {
                let i = self.target_ideal(t, ptr)?;
                let f = self.poly_arg(t, "f", ptr)?;
                match is_integral_element(&f, &i, self.g.cap)? {
                    IntegralityResult::Integral(n) => {
                        (json!({ "integral": true, "power": n }), Status::Ok)
                    }
                    IntegralityResult::UnknownUpTo(c) => {
                        (json!({ "integral": null, "cap": c }), Status::Inconclusive)
                    }
                }
            }
            "multiplicity" => (
                json!({
                    "multiplicity":
                        multiplicity_2d(&self.target_ideal(t, ptr)?, 4, self.g.seed)?
                }),
                Status::Ok,
            ),
            "rees" => {
                let r = rees_presentation(&self.target_ideal(t, ptr)?)?;
                (json!({ "relations": gens_of(&r) }), Status::Ok)
            }
            "order" => match self.target(t, ptr)? {
                Obj::Module(m) => (json!({ "order": order_module(m)? }), Status::Ok),
                _ => (
                    json!({ "order": order_local(&self.target_ideal(t, ptr)?)? }),
                    Status::Ok,
                ),
            },
            "nu" => match self.target(t, ptr)? {
                Obj::Module(m) => (json!({ "nu": nu_module(m)? }), Status::Ok),
                _ => (
                    json!({ "nu": nu_local(&self.target_ideal(t, ptr)?)? }),
                    Status::Ok,
                ),
            },
            "contracted" => match self.target(t, ptr)? {
                Obj::Module(m) => {
                    (json!({ "contracted": is_contracted_module(m)? }), Status::Ok)
                }
                _ => {
                    let li = LocalIdeal2D::new(self.target_ideal(t, ptr)?)?;
                    (json!({ "contracted": is_contracted(&li)? }), Status::Ok)
                }
            },
            "base-points" => {
                let li = LocalIdeal2D::new(self.target_ideal(t, ptr)?)?;
                let bp = base_points(&li)?;
                (
                    json!({
                        "finite": bp.finite.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        "infinity": bp.infinity,
                    }),
                    Status::Ok,
                )
            }
            "is-closed" => match self.target(t, ptr)? {
                Obj::Module(m) => (
                    json!({ "closed": is_integrally_closed_module(m, self.g.seed)? }),
                    Status::Ok,
                ),
                Obj::Monomial(m) => (
                    json!({ "closed": icl_core::monomial_ideal::is_monomial_closed(m)? }),
                    Status::Ok,
                ),
                Obj::Ideal(i) => {
                    let li = LocalIdeal2D::new(i.clone())?;
                    (
                        json!({ "closed": is_integrally_closed_2d(&li, DEFAULT_DEPTH)? }),
                        Status::Ok,
                    )
                }
            },
            "fitting" => {
                let m = self.target_module(t, ptr)?;
                let idx = get(t, "index", ptr)?
                    .as_u64()
                    .and_then(|n| usize::try_from(n).ok())
                    .ok_or_else(|| schema(&format!("{ptr}/index"), "expected an integer"))?;
                (
                    json!({ "generators": gens_of(&fitting_ideal(&m, idx)?) }),
                    Status::Ok,
                )
            }
            "bourbaki" => {
                let m = self.target_module(t, ptr)?;
                let b = generic_bourbaki_ideal(&m, None, GenericMode::Random, self.g.seed)?;
                (
                    json!({
                        "generators": gens_of(&b.ideal),
                        "path": serde_json::to_value(b.path).unwrap(),
                    }),
                    Status::Ok,
                )
            }
            "verify-itoh" => {
                let exps = as_array(get(t, "exponents", ptr)?, &format!("{ptr}/exponents"))?
                    .iter()
                    .enumerate()
                    .map(|(i, e)| {
                        e.as_u64().and_then(|n| u32::try_from(n).ok()).ok_or_else(|| {
                            schema(&format!("{ptr}/exponents/{i}"), "expected an exponent")
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                let nmax = t.get("nmax").and_then(|v| v.as_u64()).unwrap_or(2) as u32;
                let rep = verify_itoh(&exps, nmax)?;
                let out = report_outcome(&rep);
                (out.json, out.status)
            }
            "verify-specialize" => {
                let i = self.target_ideal(t, ptr)?;
                let rep = verify_specialization(
                    &i,
                    &[self.g.seed, self.g.seed.wrapping_add(1)],
                    self.g.cap,
                    self.g.degree_bound,
                )?;
                let out = report_outcome(&rep);
                (out.json, out.status)
            }
            "verify-radical" => {
                let i = self.target_ideal(t, ptr)?;
                let rep = verify_radical(&i, self.g.seed, None, self.g.cap)?;
                let out = report_outcome(&rep);
                (out.json, out.status)
            }
            "verify-product" => {
                let count = t.get("count").and_then(|v| v.as_u64()).unwrap_or(10) as u32;
                let rep = verify_product_closure(count, self.g.seed)?;
                let out = report_outcome(&rep);
                (out.json, out.status)
            }
            other => {
                return Err(schema(&format!("{ptr}/op"), &format!("unknown op `{other}`")))
            }
        };
        Ok(out)
    }
}

pub fn run_file(g: &Global, path: &Path) -> Result<Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    let doc: Value = serde_json::from_str(&text)
        .map_err(|e| Error::Invalid(format!("invalid JSON: {e}")))?;
    let root = as_object(&doc, "")?;
    if let Some(v) = root.get("version") {
        let ver = v
            .as_u64()
            .ok_or_else(|| schema("/version", "expected an integer"))?;
        if ver != 1 {
            return Err(schema("/version", "unsupported version (expected 1)"));
        }
    }
    let ring = parse_ring_obj(get(root, "ring", "")?)?;
    let mut objects = BTreeMap::new();
    for (name, v) in as_object(get(root, "objects", "")?, "/objects")? {
        objects.insert(name.clone(), parse_object(&ring, name, v)?);
    }
    let tasks = as_array(get(root, "tasks", "")?, "/tasks")?;
    let cx = TaskCx {
        g,
        ring: &ring,
        objects: &objects,
    };
    let mut results = Vec::new();
    let mut human = Vec::new();
    let mut status = Status::Ok;
    for (i, task) in tasks.iter().enumerate() {
        let ptr = format!("/tasks/{i}");
        let t = as_object(task, &ptr)?;
        let (value, s) = cx.run_task(t, &ptr)?;
        if s == Status::Fail || (s == Status::Inconclusive && status == Status::Ok) {
            status = s;
        }
        let op = t.get("op").and_then(|v| v.as_str()).unwrap_or("?");
        let target = t.get("target").and_then(|v| v.as_str()).unwrap_or("-");
        human.push(format!("{op} {target}: {value}"));
        results.push(json!({ "task": i, "op": op, "result": value }));
    }
    Ok(Outcome {
        json: json!({ "results": results }),
        human: human.join("\n"),
        status,
    })
}
