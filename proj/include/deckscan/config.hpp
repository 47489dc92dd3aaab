#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "deckscan/mission/deck.hpp"
#include "deckscan/mission/plan.hpp"
#include "deckscan/mission/simulate.hpp"
#include "deckscan/nde/condition_map.hpp"
#include "deckscan/nde/impact_echo.hpp"
#include "deckscan/nde/slab.hpp"
#include "deckscan/nde/usw.hpp"
#include "deckscan/vision/corpus.hpp"
#include "deckscan/vision/georef.hpp"
#include "deckscan/vision/pipeline.hpp"

namespace deckscan {

/// Every tunable of the toolkit with its shipped default. Key names in
/// the config file carry explicit units; unknown keys are rejected so a
/// typo cannot silently fall back to a default.
struct SurveyConfig {
    mission::DeckSpec deck;                 // 200 ft x 20 ft survey area
    mission::MissionMode mode = mission::MissionMode::stop_move;
    double station_spacing_m = 2.0 * mission::kFoot;
    mission::MotionSettings motion;
    double dt_s = 0.01;
    double capture_radius_m = 0.05;

    nav::ControllerParams controller;       // lambda = 0.05
    mission::GainsPolicy gains;             // omni PD selection

    mission::NoiseModel noise{0.02, 0.01, 1};

    vision::CrackVisionParams crack;
    double image_scale_m_per_px = 1.0e-3;
    vision::CameraModel camera;
    vision::CorpusParams corpus;

    nde::NdePhysics nde;
    double slab_thickness_m = 0.2;
    nde::IEClassBands ie_bands;
    nde::USWParams usw_band;
    nde::GridParams map;

    std::string slab_file;                  // ground truth for synthetic surveys
    std::string output_dir = "out";

    void validate() const;
};

SurveyConfig default_config();

/// Strict parse: missing keys take defaults, unknown keys fail.
SurveyConfig parse_config(const std::string& json_text);
SurveyConfig load_config(const std::string& path);

std::string serialize_config(const SurveyConfig& config);

bool config_equal(const SurveyConfig& a, const SurveyConfig& b);

}  // namespace deckscan
