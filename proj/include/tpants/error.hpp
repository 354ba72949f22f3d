// Copyright 2026 The tpants Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace tpants {

// Base for every error raised by the library. Subclasses map onto the failure
// categories callers are expected to distinguish (the CLI maps DomainError and
// UsageError to exit code 2, everything else to 1).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TPANTS_DEFINE_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

TPANTS_DEFINE_ERROR(DomainError);
TPANTS_DEFINE_ERROR(ArithmeticError);
TPANTS_DEFINE_ERROR(SingularSystemError);
TPANTS_DEFINE_ERROR(DegeneracyError);
TPANTS_DEFINE_ERROR(CertificationError);
TPANTS_DEFINE_ERROR(ConstructionError);
TPANTS_DEFINE_ERROR(IoError);
TPANTS_DEFINE_ERROR(LemmaViolation);
TPANTS_DEFINE_ERROR(CoverageError);
TPANTS_DEFINE_ERROR(BranchError);
TPANTS_DEFINE_ERROR(NumericError);
TPANTS_DEFINE_ERROR(UsageError);

#undef TPANTS_DEFINE_ERROR

}  // namespace tpants
