#include "chaoscrypt/error.hpp"

namespace chaoscrypt {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidBakerKey: return "InvalidBakerKey";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::PixelOutOfRange: return "PixelOutOfRange";
    case ErrorCode::ConfigKeyMismatch: return "ConfigKeyMismatch";
    case ErrorCode::DegenerateMasterKey: return "DegenerateMasterKey";
    case ErrorCode::DegenerateState: return "DegenerateState";
    case ErrorCode::BakerRequiresPow2N: return "BakerRequiresPow2N";
    case ErrorCode::InvalidKeyPerturbation: return "InvalidKeyPerturbation";
    case ErrorCode::AttackInapplicable: return "AttackInapplicable";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::NonSquareImage: return "NonSquareImage";
    case ErrorCode::UnsupportedMaxval: return "UnsupportedMaxval";
    case ErrorCode::TruncatedRaster: return "TruncatedRaster";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace chaoscrypt
