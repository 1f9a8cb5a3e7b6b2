//! From command-line parameters to a validated spec.

use vcg_core::group::{validate_with_cap, CheckedSpec, GroupSpec, ThetaSpec};
use vcg_core::{Error, Result};

use crate::args::{FamilyArg, GroupArgs};

fn need<T: Copy>(v: Option<T>, flag: &str, family: FamilyArg) -> Result<T> {
    v.ok_or_else(|| Error::Validation {
        condition: format!("parameter {flag} given for family {}", family.name()),
    })
}

fn group_spec(g: &GroupArgs) -> Result<GroupSpec> {
    let f = g.family;
    Ok(match f {
        FamilyArg::Cyclic => GroupSpec::Cyclic {
            m: need(g.m, "-m", f)?,
        },
        FamilyArg::Metacyclic | FamilyArg::Zazbz => GroupSpec::Metacyclic {
            a: need(g.a, "-a", f)?,
            b: need(g.b, "-b", f)?,
            r: need(g.r, "-r", f)?,
        },
        FamilyArg::Q => GroupSpec::Quaternion {
            i: need(g.i, "-i", f)?,
        },
        FamilyArg::Zbq => GroupSpec::ZbTimesQ {
            b: need(g.b, "-b", f)?,
            i: need(g.i, "-i", f)?,
        },
        FamilyArg::Zazbq | FamilyArg::Zazbqz => GroupSpec::ZaZbQ {
            a: need(g.a, "-a", f)?,
            b: need(g.b, "-b", f)?,
            i: need(g.i, "-i", f)?,
            r: g.r.unwrap_or(1),
            r_x: g.r_x.unwrap_or(1),
            r_y: g.r_y.unwrap_or(1),
        },
    })
}

fn twist_given(g: &GroupArgs) -> bool {
    [g.c, g.c_a, g.c_b, g.c_x, g.c_y, g.k, g.ell]
        .iter()
        .any(Option::is_some)
        || g.x_image.is_some()
}

fn theta(g: &GroupArgs) -> ThetaSpec {
    let mut t = match (g.x_image, g.y_image) {
        (Some(x), Some(y)) => ThetaSpec::general(x, y),
        _ => ThetaSpec::standard(1, 1, g.k.unwrap_or(1), g.ell.unwrap_or(0)),
    };
    t.c = g.c.unwrap_or(0);
    t.c_a = g.c_a.unwrap_or(1);
    t.c_b = g.c_b.unwrap_or(1);
    t.c_x = g.c_x.unwrap_or(0);
    t.c_y = g.c_y.unwrap_or(0);
    t
}

/// Validates the parameters. Infinite families always carry a twist (the
/// identity when none is given); finite ones reject twist flags.
pub fn checked_spec(g: &GroupArgs) -> Result<CheckedSpec> {
    let spec = group_spec(g)?;
    let theta = if g.family.is_infinite() {
        Some(theta(g))
    } else if twist_given(g) {
        return Err(Error::Validation {
            condition: format!(
                "twist flags only with an infinite family (zazbz, zazbqz), not {}",
                g.family.name()
            ),
        });
    } else {
        None
    };
    validate_with_cap(spec, theta, g.max_order)
}
