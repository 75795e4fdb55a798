// Copyright 2026 The tempdrt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TEMPDRT_ERRORS_H_
#define TEMPDRT_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tempdrt {

// Base class for every error raised by the library. The CLI maps all of them
// to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unrecognized character in fragment text.
class LexicalError : public Error {
 public:
  LexicalError(const std::string &message, size_t offset)
      : Error(message + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

// Word missing from the lexicon.
class UnknownWordError : public Error {
 public:
  explicit UnknownWordError(const std::string &word)
      : Error("unknown word '" + word + "'"), word_(word) {}
  const std::string &word() const { return word_; }

 private:
  std::string word_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ResolutionError : public Error {
 public:
  using Error::Error;
};

class ConstructionError : public Error {
 public:
  using Error::Error;
};

class MergeError : public Error {
 public:
  using Error::Error;
};

// Malformed DRS term syntax.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string &message, size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

// Malformed model file.
class ModelError : public Error {
 public:
  ModelError(const std::string &message, int line)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class EvalError : public Error {
 public:
  using Error::Error;
};

}  // namespace tempdrt

#endif  // TEMPDRT_ERRORS_H_
