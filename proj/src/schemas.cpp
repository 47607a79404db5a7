#include "laxlin/io.hpp"

namespace laxlin {

namespace {

const char* const kSymSeq = R"({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "Symmetric sequence",
  "description": "Levels 1..N of a symmetric sequence of finite pointed sets. Level n lists its non-basepoint labels; generators[i] lists the image of each label under the adjacent transposition (i i+1). Omitted generators mean the trivial action.",
  "type": "object",
  "required": ["type", "levels"],
  "additionalProperties": false,
  "properties": {
    "type": {"const": "symseq"},
    "description": {"type": "string"},
    "levels": {"type": "array", "minItems": 1, "items": {"$ref": "#/definitions/level"}}
  },
  "definitions": {
    "label": {"type": "string", "minLength": 1, "pattern": "^[^*]"},
    "level": {
      "type": "object",
      "required": ["arity", "labels"],
      "additionalProperties": false,
      "properties": {
        "arity": {"type": "integer", "minimum": 1},
        "labels": {"type": "array", "items": {"$ref": "#/definitions/label"}},
        "generators": {"type": "array", "items": {"type": "array", "items": {"$ref": "#/definitions/label"}}}
      }
    }
  }
})";

const char* const kOperad = R"({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "Operad",
  "description": "A symmetric sequence with a unit in level 1 and composition entries gamma(outer; inner_1, ..., inner_k) = result, where inner_i lies in level parts[i] and outer in level k. A result of \"*\" is the basepoint.",
  "type": "object",
  "required": ["type", "levels", "unit", "gamma"],
  "additionalProperties": false,
  "properties": {
    "type": {"const": "operad"},
    "description": {"type": "string"},
    "levels": {"type": "array", "minItems": 1, "items": {"$ref": "#/definitions/level"}},
    "unit": {"$ref": "#/definitions/label"},
    "gamma": {"type": "array", "items": {"$ref": "#/definitions/entry"}}
  },
  "definitions": {
    "label": {"type": "string", "minLength": 1, "pattern": "^[^*]"},
    "level": {
      "type": "object",
      "required": ["arity", "labels"],
      "additionalProperties": false,
      "properties": {
        "arity": {"type": "integer", "minimum": 1},
        "labels": {"type": "array", "items": {"$ref": "#/definitions/label"}},
        "generators": {"type": "array", "items": {"type": "array", "items": {"$ref": "#/definitions/label"}}}
      }
    },
    "entry": {
      "type": "object",
      "required": ["parts", "outer", "inner", "result"],
      "additionalProperties": false,
      "properties": {
        "parts": {"type": "array", "minItems": 1, "items": {"type": "integer", "minimum": 1}},
        "outer": {"$ref": "#/definitions/label"},
        "inner": {"type": "array", "minItems": 1, "items": {"$ref": "#/definitions/label"}},
        "result": {"type": "string", "minLength": 1}
      }
    }
  }
})";

const char* const kFunSeq = R"({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "Symmetric functor sequence",
  "description": "Levels 1..N; level k is a wedge of monomials A ^ X_1^d_1 ^ ... ^ X_k^d_k. A coefficient lists the labels of A; a label is a product of atoms written a*b, and \"1\" is the empty product. An optional action gives, per adjacent transposition, the image index of each coefficient label.",
  "type": "object",
  "required": ["type", "levels"],
  "additionalProperties": false,
  "properties": {
    "type": {"const": "funseq"},
    "description": {"type": "string"},
    "levels": {"type": "array", "minItems": 1, "items": {"$ref": "#/definitions/level"}}
  },
  "definitions": {
    "level": {
      "type": "object",
      "required": ["arity", "terms"],
      "additionalProperties": false,
      "properties": {
        "arity": {"type": "integer", "minimum": 1},
        "terms": {"type": "array", "items": {"$ref": "#/definitions/term"}}
      }
    },
    "term": {
      "type": "object",
      "required": ["coeff", "exps"],
      "additionalProperties": false,
      "properties": {
        "coeff": {"type": "array", "minItems": 1, "items": {"type": "string", "pattern": "^[^*]+(\\*[^*]+)*$"}},
        "exps": {"type": "array", "minItems": 1, "items": {"type": "integer", "minimum": 0}},
        "action": {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 0}}}
      }
    }
  }
})";

const char* const kSphere = R"({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "Sphere operad input",
  "description": "Exact rational inputs for the sphere operad: a composition gamma(s; t_1, ..., t_k), a point of S_n ^ S^1 for the cube homeomorphism, or a self-map of S^U_m ^ S^U with points to evaluate it at. Rationals are strings p/q; \"inf\" is the basepoint.",
  "oneOf": [
    {"$ref": "#/definitions/gamma"},
    {"$ref": "#/definitions/coend"},
    {"$ref": "#/definitions/stabilize"}
  ],
  "definitions": {
    "rational": {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"},
    "simplex": {"type": "array", "minItems": 1, "items": {"$ref": "#/definitions/rational"}},
    "point": {"oneOf": [{"$ref": "#/definitions/simplex"}, {"const": "inf"}]},
    "suspension": {
      "oneOf": [
        {"const": "inf"},
        {
          "type": "object",
          "required": ["sphere", "x"],
          "additionalProperties": false,
          "properties": {
            "sphere": {"type": "array", "minItems": 1, "items": {"$ref": "#/definitions/simplex"}},
            "x": {"type": "array", "minItems": 1, "items": {"$ref": "#/definitions/rational"}}
          }
        }
      ]
    },
    "permutation": {"type": "array", "minItems": 1, "items": {"type": "integer", "minimum": 0}},
    "map": {
      "type": "object",
      "required": ["op"],
      "additionalProperties": false,
      "properties": {
        "op": {"enum": ["identity", "permute_units", "permute_slots", "reflect", "constant", "compose", "stabilize"]},
        "perm": {"$ref": "#/definitions/permutation"},
        "mask": {"type": "array", "minItems": 1, "items": {"type": "boolean"}},
        "f": {"$ref": "#/definitions/map"},
        "g": {"$ref": "#/definitions/map"},
        "blocks": {"type": "array", "minItems": 1, "items": {"type": "integer", "minimum": 1}}
      }
    },
    "gamma": {
      "type": "object",
      "required": ["type", "s", "ts"],
      "additionalProperties": false,
      "properties": {
        "type": {"const": "sphere-gamma"},
        "description": {"type": "string"},
        "s": {"$ref": "#/definitions/point"},
        "ts": {"type": "array", "minItems": 1, "items": {"$ref": "#/definitions/point"}}
      }
    },
    "coend": {
      "type": "object",
      "required": ["type", "s", "x"],
      "additionalProperties": false,
      "properties": {
        "type": {"const": "sphere-coend"},
        "description": {"type": "string"},
        "s": {"$ref": "#/definitions/point"},
        "x": {"oneOf": [{"$ref": "#/definitions/rational"}, {"const": "inf"}]}
      }
    },
    "stabilize": {
      "type": "object",
      "required": ["type", "units", "arity", "map", "points"],
      "additionalProperties": false,
      "properties": {
        "type": {"const": "sphere-stabilize"},
        "description": {"type": "string"},
        "units": {"type": "integer", "minimum": 1},
        "arity": {"type": "integer", "minimum": 1},
        "map": {"$ref": "#/definitions/map"},
        "points": {"type": "array", "minItems": 1, "items": {"$ref": "#/definitions/suspension"}}
      }
    }
  }
})";

const char* const kReport = R"({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "Report",
  "description": "Output of a laxlin command. A failing report carries the first counterexample as its witness.",
  "type": "object",
  "required": ["type", "command", "status"],
  "additionalProperties": false,
  "properties": {
    "type": {"const": "report"},
    "command": {"type": "string", "minLength": 1},
    "status": {"enum": ["pass", "fail", "not-established"]},
    "seed": {"type": "integer", "minimum": 0},
    "counts": {"type": "object"},
    "witness": {},
    "result": {},
    "timing_ms": {"type": "number", "minimum": 0}
  },
  "if": {"properties": {"status": {"const": "fail"}}},
  "then": {"required": ["witness"]}
})";

}  // namespace

const std::map<std::string, ojson>& schemas() {
  static const std::map<std::string, ojson> all{
      {"symseq", ojson::parse(kSymSeq)},
      {"operad", ojson::parse(kOperad)},
      {"funseq", ojson::parse(kFunSeq)},
      {"sphere", ojson::parse(kSphere)},
      {"report", ojson::parse(kReport)},
  };
  return all;
}

std::string schema_file_name(const std::string& name) { return name + ".schema.json"; }

}  // namespace laxlin
