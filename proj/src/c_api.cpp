#include "infogeo/infogeo.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "infogeo/config.hpp"
#include "infogeo/divergence.hpp"
#include "infogeo/errors.hpp"
#include "infogeo/report.hpp"
#include "infogeo/simplex.hpp"
#include "infogeo/suites.hpp"
#include "infogeo/tensor_extraction.hpp"

struct infogeo_session {
  infogeo::RunConfig config;
  std::string output;
  std::string last_error;
  double wall_time = 0.0;
};

namespace {

using infogeo::OutputFormat;

infogeo_status classify(std::string& message) {
  try {
    throw;
  } catch (const infogeo::ConfigError& e) {
    message = e.what();
    return INFOGEO_INVALID_CONFIG;
  } catch (const nlohmann::json::exception& e) {
    message = e.what();
    return INFOGEO_INVALID_CONFIG;
  } catch (const infogeo::IoError& e) {
    message = e.what();
    return INFOGEO_IO_ERROR;
  } catch (const infogeo::DomainError& e) {
    message = e.what();
    return INFOGEO_DOMAIN_ERROR;
  } catch (const infogeo::PreconditionError& e) {
    message = e.what();
    return INFOGEO_DOMAIN_ERROR;
  } catch (const infogeo::NumericError& e) {
    message = e.what();
    return INFOGEO_NUMERIC_ERROR;
  } catch (const std::exception& e) {
    message = e.what();
    return INFOGEO_INTERNAL_ERROR;
  } catch (...) {
    message = "unknown error";
    return INFOGEO_INTERNAL_ERROR;
  }
}

template <typename F>
infogeo_status guarded(infogeo_session* s, F&& body) {
  if (s == nullptr) return INFOGEO_INVALID_ARGUMENT;
  s->last_error.clear();
  try {
    return body();
  } catch (...) {
    return classify(s->last_error);
  }
}

template <typename F>
infogeo_status guarded_stateless(F&& body) {
  try {
    return body();
  } catch (...) {
    std::string ignored;
    return classify(ignored);
  }
}

void copy_error(const std::string& msg, char* buf, size_t len) {
  if (buf == nullptr || len == 0) return;
  const size_t n = std::min(len - 1, msg.size());
  std::memcpy(buf, msg.data(), n);
  buf[n] = '\0';
}

infogeo_status publish(infogeo_session* s, std::string content, const char** out, size_t* out_len) {
  s->output = std::move(content);
  if (s->config.output_path) infogeo::write_file(*s->config.output_path, s->output);
  if (out) *out = s->output.c_str();
  if (out_len) *out_len = s->output.size();
  return INFOGEO_OK;
}

infogeo_status create(const std::string& text, infogeo_session** out, char* err_buf, size_t err_len) {
  if (out == nullptr) return INFOGEO_INVALID_ARGUMENT;
  *out = nullptr;
  try {
    auto* s = new infogeo_session{infogeo::parse_config_text(text), {}, {}, 0.0};
    *out = s;
    return INFOGEO_OK;
  } catch (...) {
    std::string msg;
    const infogeo_status st = classify(msg);
    copy_error(msg, err_buf, err_len);
    return st;
  }
}

}  // namespace

extern "C" {

const char* infogeo_version(void) { return "0.1.0"; }

const char* infogeo_status_string(infogeo_status s) {
  switch (s) {
    case INFOGEO_OK: return "ok";
    case INFOGEO_VERIFICATION_FAILED: return "verification failed";
    case INFOGEO_INVALID_CONFIG: return "invalid configuration";
    case INFOGEO_IO_ERROR: return "i/o error";
    case INFOGEO_DOMAIN_ERROR: return "domain error";
    case INFOGEO_NUMERIC_ERROR: return "numeric error";
    case INFOGEO_INTERNAL_ERROR: return "internal error";
    case INFOGEO_INVALID_ARGUMENT: return "invalid argument";
  }
  return "unknown status";
}

infogeo_status infogeo_session_create(const char* config_json, infogeo_session** out, char* err_buf, size_t err_len) {
  if (config_json == nullptr) return INFOGEO_INVALID_ARGUMENT;
  return create(config_json, out, err_buf, err_len);
}

infogeo_status infogeo_session_create_from_file(const char* path, infogeo_session** out, char* err_buf,
                                                size_t err_len) {
  if (path == nullptr || out == nullptr) return INFOGEO_INVALID_ARGUMENT;
  *out = nullptr;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    copy_error(std::string("cannot read configuration '") + path + "'", err_buf, err_len);
    return INFOGEO_IO_ERROR;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return create(ss.str(), out, err_buf, err_len);
}

void infogeo_session_destroy(infogeo_session* s) { delete s; }

infogeo_status infogeo_set_seed(infogeo_session* s, uint64_t seed) {
  return guarded(s, [&] {
    s->config.seed = seed;
    return INFOGEO_OK;
  });
}

infogeo_status infogeo_set_format(infogeo_session* s, infogeo_format f) {
  return guarded(s, [&] {
    if (f != INFOGEO_FORMAT_JSON && f != INFOGEO_FORMAT_CSV) return INFOGEO_INVALID_ARGUMENT;
    s->config.format = f == INFOGEO_FORMAT_JSON ? OutputFormat::json : OutputFormat::csv;
    return INFOGEO_OK;
  });
}

infogeo_status infogeo_set_output_path(infogeo_session* s, const char* path) {
  return guarded(s, [&] {
    if (path == nullptr)
      s->config.output_path.reset();
    else
      s->config.output_path = std::string(path);
    return INFOGEO_OK;
  });
}

infogeo_status infogeo_verify(infogeo_session* s, const char** out, size_t* out_len) {
  return guarded(s, [&] {
    const infogeo::VerificationReport r = infogeo::run_suite(s->config);
    s->wall_time = r.wall_time_seconds;
    publish(s, infogeo::render_summary(r, s->config.format), out, out_len);
    if (!r.passed()) {
      s->last_error = "one or more checks failed";
      return INFOGEO_VERIFICATION_FAILED;
    }
    return INFOGEO_OK;
  });
}

infogeo_status infogeo_report(infogeo_session* s, const char** out, size_t* out_len) {
  return guarded(s, [&] {
    const infogeo::VerificationReport r = infogeo::run_suite(s->config);
    s->wall_time = r.wall_time_seconds;
    publish(s, infogeo::render_rows(r, s->config.format), out, out_len);
    if (!r.passed()) {
      s->last_error = "one or more checks failed";
      return INFOGEO_VERIFICATION_FAILED;
    }
    return INFOGEO_OK;
  });
}

infogeo_status infogeo_tensor(infogeo_session* s, const char* point_json, const char** out, size_t* out_len) {
  return guarded(s, [&] {
    nlohmann::ordered_json dump;
    if (point_json != nullptr) {
      nlohmann::json point;
      try {
        point = nlohmann::json::parse(point_json);
      } catch (const nlohmann::json::parse_error& e) {
        throw infogeo::DomainError(std::string("point is not valid JSON: ") + e.what());
      }
      dump = infogeo::tensor_dump(s->config, &point);
    } else {
      dump = infogeo::tensor_dump(s->config);
    }
    return publish(s, infogeo::render_tensor(dump, s->config.format), out, out_len);
  });
}

const char* infogeo_last_error(const infogeo_session* s) { return s ? s->last_error.c_str() : "null session"; }

double infogeo_last_wall_time(const infogeo_session* s) { return s ? s->wall_time : 0.0; }

infogeo_status infogeo_kl_divergence(const double* p, const double* q, size_t n, double* out) {
  if (p == nullptr || q == nullptr || out == nullptr) return INFOGEO_INVALID_ARGUMENT;
  return guarded_stateless([&] {
    *out = infogeo::kl_divergence({p, n}, {q, n});
    return INFOGEO_OK;
  });
}

infogeo_status infogeo_fisher_rao_metric(const double* p, size_t n, double* out) {
  if (p == nullptr || out == nullptr) return INFOGEO_INVALID_ARGUMENT;
  return guarded_stateless([&] {
    const infogeo::Mat g = infogeo::fisher_rao_metric(infogeo::make_simplex_point({p, p + n})).components;
    const auto rm = infogeo::to_row_major(g);
    std::copy(rm.begin(), rm.end(), out);
    return INFOGEO_OK;
  });
}

infogeo_status infogeo_extract_kl_metric(const double* p, size_t n, int richardson, double* out) {
  if (p == nullptr || out == nullptr) return INFOGEO_INVALID_ARGUMENT;
  return guarded_stateless([&] {
    const infogeo::SimplexPoint sp = infogeo::make_simplex_point({p, p + n});
    infogeo::DifferentiationConfig cfg;
    if (richardson) cfg.scheme = infogeo::Scheme::richardson_central;
    const infogeo::Mat g =
        infogeo::extract_divergence_metric(infogeo::kl_function(n), infogeo::simplex_frame(n),
                                           infogeo::to_chart_point(sp), cfg)
            .components;
    const auto rm = infogeo::to_row_major(g);
    std::copy(rm.begin(), rm.end(), out);
    return INFOGEO_OK;
  });
}

}  // extern "C"
