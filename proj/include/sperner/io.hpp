#ifndef SPERNER_IO_HPP
#define SPERNER_IO_HPP

#include <iosfwd>
#include <string>

#include "sperner/family.hpp"
#include "sperner/poset.hpp"

namespace sperner {

// Family text format: '#' starts a comment, blank lines are skipped, the
// first content line is `n=<int>`, every further line is one set as strictly
// increasing comma-separated elements of 1..n, with `-` for the empty set.
// Repeated sets are rejected with the offending line number.
SetFamily parse_family(std::istream& in);
SetFamily parse_family_string(const std::string& text);
SetFamily parse_family_file(const std::string& path);

std::string write_family(const SetFamily& family);

// "1,2,5" for a set, "-" for the empty set.
std::string format_set(Mask m);

// Poset text format: `nodes=<int>`, then one `parent(<i>)=<j>` line for every
// node 1..N-1 (node 0 is the root).
TreePoset parse_poset(std::istream& in);
TreePoset parse_poset_string(const std::string& text);

// `chain:<k>`, `tree:h=<h>,c=<c>`, or a path to a poset file.
TreePoset poset_from_spec(const std::string& spec);

// Generator shorthand: `level:n=..,i=..`, `band:n=..,lo=..,hi=..`,
// `low:n=..,l=..`, `midband:n=..,k=..,lp=..`.
SetFamily construct_family(const std::string& spec);

}  // namespace sperner

#endif
