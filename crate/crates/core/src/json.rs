//! Serialization helpers for arbitrary-precision integers.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

/// Serializes as a JSON number when the value fits in 64 bits, else as a decimal string.
pub(crate) struct Integer<'a>(pub &'a BigInt);

impl Serialize for Integer<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if let Some(v) = self.0.to_i64() {
            serializer.serialize_i64(v)
        } else if let Some(v) = self.0.to_u64() {
            serializer.serialize_u64(v)
        } else {
            serializer.serialize_str(&self.0.to_string())
        }
    }
}
