#include "qsym.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "qsym/analyzer.hpp"
#include "qsym/errors.hpp"
#include "qsym/fixtures.hpp"
#include "qsym/json_io.hpp"

struct qsym_graph {
  qsym::OneGraph g;
};
struct qsym_triple {
  qsym::Triple t;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** error, const std::string& msg) {
  if (error) *error = dup_string(msg);
}

// Runs the body, mapping exceptions to status codes.
template <typename F>
int guarded(char** error, F&& body) {
  try {
    return body();
  } catch (const qsym::BudgetExceeded& e) {
    set_error(error, e.what());
    return QSYM_ERR_BUDGET;
  } catch (const qsym::ParseError& e) {
    set_error(error, e.what());
    return QSYM_ERR_INPUT;
  } catch (const qsym::InvalidArgument& e) {
    set_error(error, e.what());
    return QSYM_ERR_INPUT;
  } catch (const qsym::InternalError& e) {
    set_error(error, e.what());
    return QSYM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(error, e.what());
    return QSYM_ERR_INTERNAL;
  }
}

} // namespace

extern "C" {

void qsym_string_free(char* s) { std::free(s); }

int qsym_graph_parse(const char* json_text, qsym_graph** out, char** error) {
  return guarded(error, [&] {
    if (!json_text || !out) {
      set_error(error, "null argument");
      return QSYM_ERR_INPUT;
    }
    *out = new qsym_graph{qsym::parse_graph(json_text)};
    return QSYM_OK;
  });
}

void qsym_graph_free(qsym_graph* g) { delete g; }

int qsym_graph_to_json(const qsym_graph* g, char** out, char** error) {
  return guarded(error, [&] {
    *out = dup_string(qsym::serialize_graph(g->g));
    return QSYM_OK;
  });
}

int qsym_graph_validate(const qsym_graph* g, char** report, char** error) {
  return guarded(error, [&] {
    qsym::ValidationReport r = qsym::validate_graph(g->g);
    if (report) *report = dup_string(qsym::serialize_validation(r));
    return r.ok() ? QSYM_OK : QSYM_NEGATIVE;
  });
}

int qsym_triple_parse(const char* json_text, qsym_triple** out, char** error) {
  return guarded(error, [&] {
    if (!json_text || !out) {
      set_error(error, "null argument");
      return QSYM_ERR_INPUT;
    }
    *out = new qsym_triple{qsym::parse_triple(json_text)};
    return QSYM_OK;
  });
}

void qsym_triple_free(qsym_triple* t) { delete t; }

int qsym_triple_to_json(const qsym_triple* t, char** out, char** error) {
  return guarded(error, [&] {
    *out = dup_string(qsym::serialize_triple(t->t));
    return QSYM_OK;
  });
}

int qsym_triple_validate(const qsym_triple* t, char** report, char** error) {
  return guarded(error, [&] {
    qsym::ValidationReport r = qsym::validate_triple(t->t);
    if (report) *report = dup_string(qsym::serialize_validation(r));
    return r.ok() ? QSYM_OK : QSYM_NEGATIVE;
  });
}

int qsym_pullback(const qsym_graph* g, qsym_triple** out, char** error) {
  return guarded(error, [&] {
    *out = new qsym_triple{qsym::pullback(g->g)};
    return QSYM_OK;
  });
}

int qsym_composable_pairs(const qsym_triple* t, char** out, char** error) {
  return guarded(error, [&] {
    qsym::PairList pairs = qsym::composable_pairs(t->t.g1, t->t.g2);
    *out = dup_string(qsym::serialize_pairs(t->t.g1, t->t.g2, pairs));
    return QSYM_OK;
  });
}

int qsym_theta_count(const qsym_graph* x, const qsym_graph* y, char** count,
                     char** error) {
  return guarded(error, [&] {
    *count = dup_string(qsym::count_thetas(x->g, y->g).get_str());
    return QSYM_OK;
  });
}

int qsym_theta_enumerate(const qsym_graph* x, const qsym_graph* y, uint64_t limit,
                         char** out, char** error) {
  return guarded(error, [&] {
    std::optional<uint64_t> lim;
    if (limit > 0) lim = limit;
    std::vector<qsym::Theta> thetas = qsym::enumerate_thetas(x->g, y->g, lim);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const qsym::Theta& th : thetas) {
      qsym::Triple t{x->g, y->g, th};
      arr.push_back(nlohmann::ordered_json::parse(qsym::serialize_theta(t)));
    }
    *out = dup_string(arr.dump(2) + "\n");
    return QSYM_OK;
  });
}

int qsym_triple_graph1(const qsym_triple* t, qsym_graph** out, char** error) {
  return guarded(error, [&] {
    *out = new qsym_graph{t->t.g1};
    return QSYM_OK;
  });
}

int qsym_triple_graph2(const qsym_triple* t, qsym_graph** out, char** error) {
  return guarded(error, [&] {
    *out = new qsym_graph{t->t.g2};
    return QSYM_OK;
  });
}

int qsym_skeleton_count(const qsym_triple* t, int m, int n, char** out, char** error) {
  return guarded(error, [&] {
    *out = dup_string(qsym::serialize_skeleton(qsym::skeleton_count(t->t, m, n)));
    return QSYM_OK;
  });
}

int qsym_equivalences(const qsym_triple* a, const qsym_triple* b, int all, char** out,
                      char** error) {
  return guarded(error, [&] {
    std::vector<qsym::Permutation> ws = qsym::is_equivalent(
        a->t, b->t,
        all ? qsym::WitnessMode::AllWitnesses : qsym::WitnessMode::FirstWitness);
    if (out) *out = dup_string(qsym::serialize_witnesses(ws));
    return ws.empty() ? QSYM_NEGATIVE : QSYM_OK;
  });
}

int qsym_automorphisms(const qsym_triple* t, char** out, char** error) {
  return guarded(error, [&] {
    *out = dup_string(qsym::serialize_group_report(qsym::automorphisms(t->t)));
    return QSYM_OK;
  });
}

int qsym_presentation(const qsym_triple* t, char** out, char** error) {
  return guarded(error, [&] {
    *out = dup_string(
        qsym::serialize_presentation(qsym::canonicalize(qsym::generate(t->t))));
    return QSYM_OK;
  });
}

int qsym_analyze(const qsym_triple* t, int degree_bound, size_t budget, int jobs,
                 int dump_ideal, char** out, char** error) {
  return guarded(error, [&] {
    qsym::AnalysisOptions opts;
    if (degree_bound > 0) opts.degree_bound = degree_bound;
    if (budget > 0) opts.budget = budget;
    if (jobs > 0) opts.jobs = jobs;
    opts.dump_ideal = dump_ideal != 0;
    *out = dup_string(qsym::serialize_analysis_report(qsym::analyze(t->t, opts)));
    return QSYM_OK;
  });
}

int qsym_theta_redundancy(const qsym_triple* t, int degree_bound, size_t budget,
                          int jobs, char** out, char** error) {
  return guarded(error, [&] {
    qsym::SaturationOptions opts;
    if (degree_bound > 0) opts.degree_bound = degree_bound;
    if (budget > 0) opts.budget = budget;
    if (jobs > 0) opts.jobs = jobs;
    std::vector<bool> red = qsym::check_theta_redundant(t->t, opts);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (bool b : red) arr.push_back(b);
    *out = dup_string(arr.dump() + "\n");
    return QSYM_OK;
  });
}

int qsym_fixture_names(char** out, char** error) {
  return guarded(error, [&] {
    nlohmann::ordered_json arr = qsym::fixture_names();
    *out = dup_string(arr.dump() + "\n");
    return QSYM_OK;
  });
}

int qsym_fixture_json(const char* name, char** out, char** error) {
  return guarded(error, [&] {
    if (!name) {
      set_error(error, "null fixture name");
      return QSYM_ERR_INPUT;
    }
    *out = dup_string(qsym::fixture_json(name));
    return QSYM_OK;
  });
}

} // extern "C"
