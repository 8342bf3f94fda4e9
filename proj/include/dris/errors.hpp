// SPDX-License-Identifier: Apache-2.0
#ifndef DRIS_ERRORS_HPP
#define DRIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dris {

// Malformed input: bad bit strings, length mismatches, invalid spec/config
// documents. CLI maps this to exit code 2.
class DecodeError : public std::runtime_error {
public:
    explicit DecodeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Physical-domain violations: out-of-range angles or voltages, and
// evanescent/TIR outcomes in contexts where no propagating beam can be
// produced. CLI maps this to exit code 3.
class PhysicsError : public std::domain_error {
public:
    explicit PhysicsError(const std::string& msg) : std::domain_error(msg) {}
};

// Refusal to run an enumeration larger than the configured cap.
// CLI maps this to exit code 4.
class SizeCapError : public std::runtime_error {
public:
    explicit SizeCapError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace dris

#endif
