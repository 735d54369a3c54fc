//! The set-system interchange format:
//!
//! ```json
//! {"universe": ["a", "b"], "sets": {"A": ["a"], "B": []}}
//! ```
//!
//! Member order is document order. Duplicate keys under `"sets"` are an
//! error rather than last-wins.

use std::fmt;

use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::sets::{Limits, SetFamily, Universe};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFamily {
    universe: Vec<String>,
    sets: OrderedEntries,
}

/// Map entries in document order, duplicates preserved.
struct OrderedEntries(Vec<(String, Vec<String>)>);

impl<'de> Deserialize<'de> for OrderedEntries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct EntriesVisitor;

        impl<'de> Visitor<'de> for EntriesVisitor {
            type Value = OrderedEntries;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object mapping member names to element-name arrays")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<Self::Value, A::Error> {
                let mut entries = Vec::new();
                while let Some((k, v)) = map.next_entry::<String, Vec<String>>()? {
                    entries.push((k, v));
                }
                Ok(OrderedEntries(entries))
            }
        }

        deserializer.deserialize_map(EntriesVisitor)
    }
}

pub fn parse_family(text: &str) -> Result<SetFamily> {
    parse_family_with(text, &Limits::default())
}

pub fn parse_family_with(text: &str, limits: &Limits) -> Result<SetFamily> {
    let raw: RawFamily = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    limits.check_elements(raw.universe.len())?;
    limits.check_members(raw.sets.0.len())?;
    let universe = Universe::new(raw.universe)?;
    let mut family = SetFamily::new(universe);
    for (name, elements) in raw.sets.0 {
        if family.index_of(&name).is_some() {
            return Err(Error::DuplicateMember(name));
        }
        let mut mask = family.universe().empty_set();
        for e in &elements {
            let i = family.universe().index_of(e).ok_or_else(|| Error::UnknownElement {
                member: name.clone(),
                element: e.clone(),
            })?;
            mask.insert(i);
        }
        family.push(name, mask)?;
    }
    Ok(family)
}

struct SetsView<'a>(&'a SetFamily);

impl Serialize for SetsView<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let family = self.0;
        let mut map = serializer.serialize_map(Some(family.len()))?;
        for m in family.members() {
            map.serialize_entry(&m.name, &family.universe().names_of(&m.mask))?;
        }
        map.end()
    }
}

impl Serialize for SetFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("universe", self.universe().names())?;
        map.serialize_entry("sets", &SetsView(self))?;
        map.end()
    }
}

impl<'de> Deserialize<'de> for SetFamily {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let value = serde_json::Value::deserialize(deserializer)?;
        parse_family(&value.to_string()).map_err(de::Error::custom)
    }
}

pub fn to_json(family: &SetFamily) -> String {
    serde_json::to_string(family).expect("family serialization is infallible")
}

pub fn to_json_pretty(family: &SetFamily) -> String {
    serde_json::to_string_pretty(family).expect("family serialization is infallible")
}
