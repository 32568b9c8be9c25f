#include "powerfam/model_lab.hpp"

#include <stdexcept>

namespace powerfam {

Dataset builtin_dataset(const std::string& name)
{
    if (name == "chemotherapy") {
        return Dataset{
            "chemotherapy",
            {0.047, 0.115, 0.121, 0.132, 0.164, 0.197, 0.203, 0.260, 0.282,
             0.296, 0.334, 0.395, 0.458, 0.466, 0.501, 0.507, 0.529, 0.534,
             0.540, 0.641, 0.644, 0.696, 0.841, 0.863, 1.099, 1.219, 1.271,
             1.326, 1.447, 1.485, 1.553, 1.581, 1.589, 2.178, 2.343, 2.416,
             2.444, 2.825, 2.830, 3.578, 3.658, 3.743, 3.978, 4.003, 4.033},
            "survival times in years of patients given chemotherapy alone; "
            "the originating study reports 46 patients but lists 45 values, "
            "so 45 are bundled"};
    }
    if (name == "devices") {
        return Dataset{
            "devices",
            {275, 13,  147, 23,  181, 30,  65,  10,  300, 173,
             106, 300, 300, 212, 300, 300, 300, 2,   261, 293,
             88,  247, 28,  143, 300, 23,  300, 80,  245, 266},
            "failure times of 30 devices; eight runs end at the 300 cap and "
            "are treated as exact failures, not censored"};
    }
    throw std::domain_error("unknown dataset '" + name +
                            "' (expected chemotherapy or devices)");
}

} // namespace powerfam
