#ifndef TAILSUM_ERRORS_HPP
#define TAILSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tailsum {

// Base for all library errors so callers can catch one type.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

class negative_prob_error : public error {
public:
    explicit negative_prob_error(const std::string& what) : error(what) {}
};

class total_mass_exceeds_one_error : public error {
public:
    explicit total_mass_exceeds_one_error(const std::string& what) : error(what) {}
};

class invalid_parameters_error : public error {
public:
    explicit invalid_parameters_error(const std::string& what) : error(what) {}
};

class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

class non_convergence_error : public error {
public:
    explicit non_convergence_error(const std::string& what) : error(what) {}
};

class enum_too_large_error : public error {
public:
    explicit enum_too_large_error(const std::string& what) : error(what) {}
};

class no_fit_error : public error {
public:
    explicit no_fit_error(const std::string& what) : error(what) {}
};

class quantile_unavailable_error : public error {
public:
    explicit quantile_unavailable_error(const std::string& what) : error(what) {}
};

class parse_error : public error {
public:
    explicit parse_error(const std::string& what) : error(what) {}
};

class flag_mismatch_error : public error {
public:
    explicit flag_mismatch_error(const std::string& what) : error(what) {}
};

class empty_sequence_error : public error {
public:
    explicit empty_sequence_error(const std::string& what) : error(what) {}
};

}  // namespace tailsum

#endif
