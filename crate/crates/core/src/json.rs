//! Fixed-width float formatting for byte-stable JSON.

use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

/// `x` with 17 significant digits in exponent form, `-0` folded to `0`.
pub fn format_f64(x: f64) -> String {
    format!("{:.16e}", x + 0.0)
}

/// A float that serializes through [`format_f64`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fixed17(pub f64);

impl Serialize for Fixed17 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let raw = RawValue::from_string(format_f64(self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(serializer)
    }
}

pub fn serialize_f64<S: Serializer>(x: &f64, serializer: S) -> Result<S::Ok, S::Error> {
    Fixed17(*x).serialize(serializer)
}
