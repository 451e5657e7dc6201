#ifndef MCLAB_IO_HPP
#define MCLAB_IO_HPP

#include <iosfwd>
#include <string>

#include "mclab/distribution.hpp"
#include "mclab/types.hpp"

namespace mclab {

// Concept-class file (.mcc):
//   line 1: `mcc k=<int> n=<int> mode=total|partial`
//   then one hypothesis per line as n whitespace-separated tokens, each a
//   decimal label or `*`.
// Violations raise InputError with the offending line number.
ConceptClass read_mcc(std::istream& in, const std::string& name = "<stream>");
ConceptClass read_mcc_file(const std::string& path);
void write_mcc(std::ostream& out, const ConceptClass& cls);
std::string mcc_to_string(const ConceptClass& cls);

// Distribution file (.dist): one atom per line `x y p`; `#` starts a comment;
// blank lines ignored.
FiniteDistribution read_dist(std::istream& in, int domain_size, int k,
                             const std::string& name = "<stream>");
FiniteDistribution read_dist_file(const std::string& path, int domain_size, int k);
void write_dist(std::ostream& out, const FiniteDistribution& dist);

} // namespace mclab

#endif
