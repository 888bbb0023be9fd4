#pragma once

#include <stdexcept>
#include <string>

namespace knotflow {

// Error taxonomy shared by all modules. Each condition that callers may
// want to branch on gets its own type; everything derives from Error so
// the CLI can map any library failure to a single exit path.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input is not syntactically valid (bad JSON, wrong schema, bad field types).
class MalformedInput : public Error {
public:
  explicit MalformedInput(const std::string& what) : Error("malformed input: " + what) {}
};

// Input parses but violates a structural invariant of a link diagram.
class InconsistentDiagram : public Error {
public:
  explicit InconsistentDiagram(const std::string& what) : Error("inconsistent diagram: " + what) {}
};

// A crossing/component/arc index does not exist in the target diagram.
class BadIndex : public Error {
public:
  explicit BadIndex(const std::string& what) : Error("bad index: " + what) {}
};

// A rewrite site does not match the requested move pattern.
class BadSite : public Error {
public:
  explicit BadSite(const std::string& what) : Error("bad site: " + what) {}
};

class RecursionBudgetExceeded : public Error {
public:
  explicit RecursionBudgetExceeded(const std::string& what)
      : Error("recursion budget exceeded: " + what) {}
};

// Geometric conditions.
class CurvesTooClose : public Error {
public:
  explicit CurvesTooClose(const std::string& what) : Error("curves too close: " + what) {}
};

class DegenerateSegments : public Error {
public:
  explicit DegenerateSegments(const std::string& what) : Error("degenerate segments: " + what) {}
};

class EpsilonTooLarge : public Error {
public:
  explicit EpsilonTooLarge(const std::string& what) : Error("epsilon too large: " + what) {}
};

class PointOnCurve : public Error {
public:
  explicit PointOnCurve(const std::string& what) : Error("point on curve: " + what) {}
};

// Evaluation at a pole of a Laurent polynomial.
class PoleAtZero : public Error {
public:
  explicit PoleAtZero(const std::string& what) : Error("pole at zero: " + what) {}
};

}  // namespace knotflow
