#include "nefcalc.h"

#include <cstring>
#include <new>
#include <string>

#include "nefcalc/errors.hpp"
#include "nefcalc/generator.hpp"
#include "nefcalc/json_io.hpp"
#include "nefcalc/mixedvol.hpp"
#include "nefcalc/polytope.hpp"
#include "nefcalc/report.hpp"

using namespace nefcalc;

struct nef_polytope {
  Polytope body;
};

struct nef_sequence {
  NefSequence seq;
};

namespace {

constexpr unsigned kDefaultMaxBits = 4096;

thread_local std::string g_last_error = "no error";

unsigned effective_bits(unsigned max_bits) {
  return max_bits == 0 ? kDefaultMaxBits : max_bits;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Serialization shared by every report-returning entry point: two-space
// indentation with nlohmann's stable key order keeps reports byte-identical
// across runs.
std::string serialize(const nlohmann::json& j) { return j.dump(2); }

int fail(int code, const char* what) {
  g_last_error = what;
  return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return NEF_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<int>(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return NEF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NEF_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* nef_last_error(void) { return g_last_error.c_str(); }

void nef_string_free(char* s) { delete[] s; }

int nef_polytope_parse(const char* json_text, nef_polytope** out) {
  if (!json_text || !out)
    return fail(NEF_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new nef_polytope{polytope_from_json_text(json_text)};
  });
}

int nef_polytope_to_json(const nef_polytope* p, char** out) {
  if (!p || !out) return fail(NEF_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = dup_string(serialize(polytope_to_json(p->body))); });
}

void nef_polytope_free(nef_polytope* p) { delete p; }

int nef_sequence_parse(const char* json_text, nef_sequence** out) {
  if (!json_text || !out)
    return fail(NEF_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new nef_sequence{sequence_from_json_text(json_text)};
  });
}

int nef_sequence_to_json(const nef_sequence* s, char** out) {
  if (!s || !out) return fail(NEF_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = dup_string(serialize(sequence_to_json(s->seq))); });
}

void nef_sequence_free(nef_sequence* s) { delete s; }

int nef_mixed_volume(const nef_polytope* const* bodies, int count,
                     char** report_json) {
  if (!bodies || !report_json || count <= 0)
    return fail(NEF_ERR_NULL_ARGUMENT, "null argument");
  for (int i = 0; i < count; ++i)
    if (!bodies[i]) return fail(NEF_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<Polytope> args;
    args.reserve(count);
    for (int i = 0; i < count; ++i) args.push_back(bodies[i]->body);
    *report_json = dup_string(serialize(report_mixedvol(args)));
  });
}

int nef_intersection_sequence(const nef_polytope* p, const nef_polytope* q,
                              nef_sequence** out) {
  if (!p || !q || !out) return fail(NEF_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new nef_sequence{intersection_sequence(p->body, q->body)};
  });
}

int nef_verify_sequence(const nef_sequence* s, unsigned max_bits,
                        char** report_json) {
  if (!s || !report_json) return fail(NEF_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *report_json =
        dup_string(serialize(report_verify(s->seq, effective_bits(max_bits))));
  });
}

int nef_verify_pair(const nef_polytope* p, const nef_polytope* q,
                    unsigned max_bits, char** report_json) {
  if (!p || !q || !report_json)
    return fail(NEF_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *report_json = dup_string(
        serialize(report_verify(p->body, q->body, effective_bits(max_bits))));
  });
}

int nef_bounds_sequence(const nef_sequence* s, const char* slope,
                        unsigned max_bits, char** report_json) {
  if (!s || !report_json) return fail(NEF_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    std::optional<Rational> sl;
    if (slope) sl = parse_rational(slope);
    *report_json = dup_string(serialize(report_bounds(
        s->seq, sl, nullptr, nullptr, effective_bits(max_bits))));
  });
}

int nef_bounds_pair(const nef_polytope* p, const nef_polytope* q,
                    const char* slope, unsigned max_bits, char** report_json) {
  if (!p || !q || !report_json)
    return fail(NEF_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    std::optional<Rational> sl;
    if (slope) sl = parse_rational(slope);
    NefSequence seq = intersection_sequence(p->body, q->body);
    *report_json = dup_string(serialize(report_bounds(
        seq, sl, &p->body, &q->body, effective_bits(max_bits))));
  });
}

int nef_radii(const nef_polytope* p, const nef_polytope* q,
              char** report_json) {
  if (!p || !q || !report_json)
    return fail(NEF_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *report_json = dup_string(serialize(report_radii(p->body, q->body)));
  });
}

int nef_derivative_check(const nef_polytope* p, const nef_polytope* q,
                         char** report_json) {
  if (!p || !q || !report_json)
    return fail(NEF_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *report_json = dup_string(serialize(report_derivative(p->body, q->body)));
  });
}

int nef_generate(uint64_t seed, int dim, int max_vertices, int index,
                 nef_polytope** out) {
  if (!out) return fail(NEF_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new nef_polytope{random_polytope(seed, dim, max_vertices, index)};
  });
}

}  // extern "C"
