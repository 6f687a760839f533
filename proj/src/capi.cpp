#include "circal.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "circal/decomposition.hpp"
#include "circal/knot_ops.hpp"
#include "circal/knot_table.hpp"
#include "circal/rewrites.hpp"

struct circal_decomposition {
  circal::CircularDecomposition value;
};

struct circal_report {
  circal::ValidationReport value;
};

struct circal_knot_table {
  std::vector<circal::KnotRecord> records;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* message) { g_last_error = message ? message : ""; }

template <class Fn>
circal_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return CIRCAL_OK;
  } catch (const circal::ParseError& e) {
    set_error(e.what());
    return CIRCAL_ERROR_PARSE;
  } catch (const circal::Error& e) {
    set_error(e.what());
    return CIRCAL_ERROR_DOMAIN;
  } catch (const std::exception& e) {
    set_error(e.what());
    return CIRCAL_ERROR_INTERNAL;
  }
}

circal_status argument_error(const char* message) {
  set_error(message);
  return CIRCAL_ERROR_ARGUMENT;
}

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

circal_status copy_entries(const std::vector<int>& values, int32_t* entries, size_t capacity,
                           size_t* out_count) {
  if (!out_count) return argument_error("out_count is null");
  *out_count = values.size();
  if (!entries) return CIRCAL_OK;
  if (capacity < values.size()) return argument_error("entry buffer too small");
  for (size_t i = 0; i < values.size(); ++i) entries[i] = values[i];
  return CIRCAL_OK;
}

}  // namespace

extern "C" {

const char* circal_last_error(void) { return g_last_error.c_str(); }

void circal_string_free(char* text) { std::free(text); }

circal_status circal_decomposition_parse(const char* text, circal_decomposition** out) {
  if (!text || !out) return argument_error("null argument");
  return guarded([&] { *out = new circal_decomposition{circal::parse_decomposition(text)}; });
}

circal_status circal_decomposition_serialize(const circal_decomposition* d, char** out_text) {
  if (!d || !out_text) return argument_error("null argument");
  return guarded([&] { *out_text = dup_string(circal::serialize(d->value)); });
}

void circal_decomposition_free(circal_decomposition* d) { delete d; }

size_t circal_provenance_count(const circal_decomposition* d) {
  return d ? d->value.provenance.size() : 0;
}

const char* circal_provenance_line(const circal_decomposition* d, size_t index) {
  if (!d || index >= d->value.provenance.size()) return nullptr;
  return d->value.provenance[index].c_str();
}

circal_status circal_validate(const circal_decomposition* d, circal_report** out) {
  if (!d || !out) return argument_error("null argument");
  return guarded([&] { *out = new circal_report{circal::validate(d->value)}; });
}

int circal_report_valid(const circal_report* r) { return r && r->value.valid() ? 1 : 0; }

size_t circal_report_error_count(const circal_report* r) {
  return r ? r->value.errors.size() : 0;
}

size_t circal_report_warning_count(const circal_report* r) {
  return r ? r->value.warnings.size() : 0;
}

const char* circal_report_error(const circal_report* r, size_t index) {
  if (!r || index >= r->value.errors.size()) return nullptr;
  thread_local std::string buffer;
  buffer = r->value.errors[index].text();
  return buffer.c_str();
}

const char* circal_report_warning(const circal_report* r, size_t index) {
  if (!r || index >= r->value.warnings.size()) return nullptr;
  thread_local std::string buffer;
  buffer = r->value.warnings[index].text();
  return buffer.c_str();
}

void circal_report_free(circal_report* r) { delete r; }

circal_status circal_width(const circal_decomposition* d, int32_t* entries, size_t capacity,
                           size_t* out_count) {
  if (!d) return argument_error("null decomposition");
  std::vector<int> values;
  circal_status rc = guarded([&] { values = circal::width(d->value).entries(); });
  if (rc != CIRCAL_OK) return rc;
  return copy_entries(values, entries, capacity, out_count);
}

int circal_compare_width(const int32_t* a, size_t a_count, const int32_t* b, size_t b_count) {
  size_t n = a_count < b_count ? a_count : b_count;
  for (size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  if (a_count < b_count) return -1;
  if (a_count > b_count) return 1;
  return 0;
}

circal_status circal_canonical_form(const circal_decomposition* d, circal_decomposition** out) {
  if (!d || !out) return argument_error("null argument");
  return guarded([&] { *out = new circal_decomposition{circal::canonical_form(d->value)}; });
}

circal_status circal_morse_stats(const circal_decomposition* d, int32_t out_counts[3]) {
  if (!d || !out_counts) return argument_error("null argument");
  return guarded([&] {
    circal::MorseStats stats = circal::morse_stats(d->value);
    out_counts[0] = stats.one_handles;
    out_counts[1] = stats.two_handles;
    out_counts[2] = stats.three_handles;
  });
}

circal_status circal_classify(const circal_decomposition* d, int assert_locally_thin,
                              circal_classification* out) {
  if (!d || !out) return argument_error("null argument");
  return guarded([&] {
    circal::Classification c = circal::classify(d->value, assert_locally_thin != 0);
    out->form = static_cast<int32_t>(c.form);
    out->closed_thin_component = c.closed_thin_component ? 1 : 0;
    out->multiple_thin_surfaces = c.multiple_thin_surfaces ? 1 : 0;
    out->locally_thin_asserted = c.locally_thin_asserted ? 1 : 0;
  });
}

const char* circal_form_name(int32_t form) {
  switch (form) {
    case CIRCAL_FORM_FIBERED: return "fibered-form";
    case CIRCAL_FORM_ALMOST_FIBERED: return "almost-fibered-form";
    case CIRCAL_FORM_MULTI_STAGE: return "multi-stage";
    default: return "unknown";
  }
}

circal_status circal_weak_reduction_count(const circal_decomposition* d, int32_t stage,
                                          size_t* out_count) {
  if (!d || !out_count) return argument_error("null argument");
  return guarded(
      [&] { *out_count = circal::enumerate_weak_reductions(d->value, stage).size(); });
}

circal_status circal_weak_reduction_describe(const circal_decomposition* d, int32_t stage,
                                             size_t index, char** out_text) {
  if (!d || !out_text) return argument_error("null argument");
  return guarded([&] {
    auto reductions = circal::enumerate_weak_reductions(d->value, stage);
    if (index >= reductions.size())
      throw circal::DomainError("weak reduction index out of range");
    *out_text = dup_string(circal::to_string(reductions[index]));
  });
}

circal_status circal_apply_weak_reduction(const circal_decomposition* d, int32_t stage,
                                          size_t index, circal_decomposition** out) {
  if (!d || !out) return argument_error("null argument");
  return guarded([&] {
    auto reductions = circal::enumerate_weak_reductions(d->value, stage);
    if (index >= reductions.size())
      throw circal::DomainError("weak reduction index out of range");
    *out = new circal_decomposition{circal::apply_weak_reduction(d->value, reductions[index])};
  });
}

circal_status circal_remove_trivial_stage(const circal_decomposition* d, int32_t stage,
                                          circal_decomposition** out) {
  if (!d || !out) return argument_error("null argument");
  return guarded(
      [&] { *out = new circal_decomposition{circal::remove_trivial_stage(d->value, stage)}; });
}

circal_status circal_remove_parallel_region(const circal_decomposition* d, int32_t thin_from,
                                            int32_t thin_to, const char* isotopy_assertion,
                                            circal_decomposition** out) {
  if (!d || !out) return argument_error("null argument");
  return guarded([&] {
    *out = new circal_decomposition{circal::remove_parallel_region(
        d->value, thin_from, thin_to, isotopy_assertion ? isotopy_assertion : "")};
  });
}

circal_status circal_thin_search(const circal_decomposition* d, int64_t budget,
                                 circal_decomposition** out_best, char** out_trace,
                                 int64_t* out_nodes_expanded, int* out_exhausted) {
  if (!d || !out_best) return argument_error("null argument");
  return guarded([&] {
    circal::ThinSearchResult result = circal::thin_search(d->value, budget);
    if (out_trace) {
      std::string joined;
      for (const auto& line : result.trace) {
        joined += line;
        joined += '\n';
      }
      *out_trace = dup_string(joined);
    }
    if (out_nodes_expanded) *out_nodes_expanded = result.nodes_expanded;
    if (out_exhausted) *out_exhausted = result.exhausted ? 1 : 0;
    *out_best = new circal_decomposition{std::move(result.best)};
  });
}

circal_status circal_connected_sum(const circal_decomposition* left,
                                   const circal_decomposition* right, const char* left_name,
                                   const char* right_name, circal_decomposition** out) {
  if (!left || !right || !out) return argument_error("null argument");
  return guarded([&] {
    *out = new circal_decomposition{circal::connected_sum(
        left->value, right->value, left_name ? left_name : "K1", right_name ? right_name : "K2")};
  });
}

circal_status circal_boundary_sum(const circal_decomposition* left,
                                  const circal_decomposition* right, const char* left_name,
                                  const char* right_name, circal_decomposition** out) {
  if (!left || !right || !out) return argument_error("null argument");
  return guarded([&] {
    *out = new circal_decomposition{circal::boundary_sum(
        left->value, right->value, left_name ? left_name : "K1", right_name ? right_name : "K2")};
  });
}

circal_status circal_bound_csum(const circal_decomposition* left,
                                const circal_decomposition* right, int32_t* entries,
                                size_t capacity, size_t* out_count) {
  if (!left || !right) return argument_error("null argument");
  std::vector<int> values;
  circal_status rc =
      guarded([&] { values = circal::cw_upper_bound_csum(left->value, right->value).entries(); });
  if (rc != CIRCAL_OK) return rc;
  return copy_entries(values, entries, capacity, out_count);
}

circal_status circal_bound_bsum(const circal_decomposition* left,
                                const circal_decomposition* right, int32_t* entries,
                                size_t capacity, size_t* out_count) {
  if (!left || !right) return argument_error("null argument");
  std::vector<int> values;
  circal_status rc =
      guarded([&] { values = circal::cw_upper_bound_bsum(left->value, right->value).entries(); });
  if (rc != CIRCAL_OK) return rc;
  return copy_entries(values, entries, capacity, out_count);
}

circal_status circal_knot_table_parse(const char* csv, circal_knot_table** out) {
  if (!csv || !out) return argument_error("null argument");
  return guarded([&] { *out = new circal_knot_table{circal::parse_knot_table(csv)}; });
}

void circal_knot_table_free(circal_knot_table* table) { delete table; }

size_t circal_knot_table_count(const circal_knot_table* table) {
  return table ? table->records.size() : 0;
}

circal_status circal_knot_table_record(const circal_knot_table* table, size_t index,
                                       const char** out_name, int32_t* out_genus,
                                       int32_t* out_fibered, int32_t* out_has_handle_number,
                                       int32_t* out_handle_number) {
  if (!table) return argument_error("null table");
  if (index >= table->records.size()) return argument_error("record index out of range");
  const circal::KnotRecord& r = table->records[index];
  if (out_name) *out_name = r.name.c_str();
  if (out_genus) *out_genus = r.genus;
  if (out_fibered) *out_fibered = r.fibered ? 1 : 0;
  if (out_has_handle_number) *out_has_handle_number = r.handle_number ? 1 : 0;
  if (out_handle_number) *out_handle_number = r.handle_number.value_or(0);
  return CIRCAL_OK;
}

circal_status circal_knot_decomposition(const circal_knot_table* table, const char* name,
                                        circal_decomposition** out) {
  if (!table || !name || !out) return argument_error("null argument");
  return guarded([&] {
    for (const auto& record : table->records) {
      if (record.name == name) {
        *out = new circal_decomposition{circal::canonical_decomposition(record)};
        return;
      }
    }
    throw circal::DomainError("knot '" + std::string(name) + "' not found in table");
  });
}

}  // extern "C"
