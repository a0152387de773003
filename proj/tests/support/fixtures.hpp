// Copyright 2026 The ackfund Authors
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

// Sample acknowledgement paratexts with hand-coded expected funder sets.
// These cover the tricky shapes: split funding sections, disclosure
// statements, foreign-language names, sub-unit apposition, grant code
// attachment, negation and in-kind support.

#ifndef ACKFUND_TESTS_FIXTURES_HPP
#define ACKFUND_TESTS_FIXTURES_HPP

#include <set>
#include <string>
#include <vector>

#include "ackfund/paratext.hpp"

namespace ackfund::fixtures {

struct AckCase {
  std::string name;
  std::vector<paratext::ParatextSection> sections;
  std::set<std::string> expected_financial;
};

inline std::vector<AckCase> acknowledgement_cases() {
  using paratext::ParatextSection;
  using paratext::SectionKind;
  std::vector<AckCase> cases;

  cases.push_back(
      {"case1",
       {{SectionKind::other, "Acknowledgements",
         "The authors thank our colleagues who have suggested or contributed data "
         "for current or previous versions of the database. They also would like to "
         "thank the swift and helpful advice from the ICGC DCC and BioMart team."},
        {SectionKind::other, "Funding",
         "Cancer Research UK (programme grant C355/A6253) and FW6 EU project "
         "MolDiag-Paca. R.C. is funded by Breast Cancer Campaign. Funding for open "
         "access charge: Cancer Research UK."}},
       {"Cancer Research UK", "FW6 EU project", "Breast Cancer Campaign"}});

  cases.push_back(
      {"case2",
       {{SectionKind::other, "Acknowledgments",
         "We are grateful to Ms. Haruka Sawada and Ms. Noriko Ikawa for technical "
         "assistance. Our bio-repository is supported by funding from the National "
         "Institute for Health Research (UK) and the Cambridge Biomedical Research "
         "Centre. This work was supported by a Grant-in-Aid for Young Scientists (A) "
         "(22681030) from the Japan Society for the Promotion of Science."},
        {SectionKind::other, "Disclosure Statement",
         "The research was funded by OncoTherapy Science, Inc. YI, YY, and KM are "
         "employees of OncoTherapy Science, Inc. YD, YN, and RH are scientific "
         "advisors of OncoTherapy Science, Inc."}},
       {"National Institute for Health Research", "Cambridge Biomedical Research Centre",
        "Japan Society for the Promotion of Science", "OncoTherapy Science, Inc."}});

  cases.push_back(
      {"case3",
       {{SectionKind::other, "Funding",
         "Grant Agency of Czech Republic (303/09/0472 and 305/09/H008); Ministry of "
         "Education of Czech Republic (MSM0021620808 and 1M0505). Work at the "
         "Institute of Cancer Research is supported by Cancer Research UK. Portions "
         "of this work were funded by National Institutes of Health (R01 ES014403 "
         "and P30 ES006096 to D.W.N. and Z.S.)."},
        {SectionKind::other, "Acknowledgments",
         "The authors would like to thank the Grant Agency of the Czech Republic and "
         "the Ministry of Education of the Czech Republic."}},
       {"Grant Agency of Czech Republic", "Ministry of Education of Czech Republic",
        "Cancer Research UK", "National Institutes of Health"}});

  cases.push_back(
      {"case4",
       {{SectionKind::other, "Acknowledgments",
         "The authors wish to thank colleagues in the Histology Laboratory and the "
         "Electron Microscopy Unit, Veterinary Laboratory Services, School of "
         "Veterinary Science, University of Liverpool, for excellent technical "
         "support. T. Soare was supported by a scholarship from the Agency for "
         "Credits and Studies, Romanian Ministry of Education, Research and "
         "Innovation."}},
       {"Romanian Ministry of Education, Research and Innovation"}});

  cases.push_back(
      {"case5",
       {{SectionKind::other, "Acknowledgments",
         "MG was supported by the grant Gu 1170/1-1 of the German Research "
         "Foundation. The support for using the research version of the Pinnacle "
         "treatment planning software from Philips Radiation Oncology Systems, "
         "Fitchburg, WI, USA is acknowledged. This work was partially supported by "
         "research Grant C46/A2131 from Cancer Research UK. We acknowledge NIHR "
         "funding to the NHS Biomedical Research Centre. The fruitful discussions "
         "and thoughtful proofreading of the manuscript by Kevin Brown and Joel "
         "Goldwein (Elekta) is acknowledged."}},
       {"German Research Foundation", "Cancer Research UK", "NIHR"}});

  cases.push_back(
      {"case6",
       {{SectionKind::other, "Acknowledgments",
         "The study was supported by the grant MA1659/6-1/2 of the Deutsche "
         "Forschungsgemeinschaft (DFG). The recombinant topoisomerase II was a "
         "generous gift of Fritz Boege, Institute of Clinical Chemistry and "
         "Laboratory Diagnostics, Heinrich Heine University (Duesseldorf, Germany). "
         "We thank Dr. Antonella Riva and Dr. Paolo Morazzoni (Indena SpA, Milan, "
         "Italy) for provision of test material. The authors have declared no "
         "conflict of interest."}},
       {"Deutsche Forschungsgemeinschaft (DFG)"}});

  return cases;
}

// A disclosure that explicitly denies funding for the focal study, then
// lists past funders of the involved organisations. Nothing here counts.
inline AckCase negated_disclosure_case() {
  using paratext::ParatextSection;
  using paratext::SectionKind;
  return {"negated_disclosure",
          {{SectionKind::other, "Acknowledgments",
            "This study was not funded. GPRD operates within the MHRA. GPRD has "
            "received funding from the MHRA, Wellcome Trust, Medical Research "
            "Council, NIHR Health Technology Assessment programme, Innovative "
            "Medicine Initiative, UK Department of Health, Technology Strategy "
            "Board, Seventh Framework Programme EU, various universities, contract "
            "research organisations and pharmaceutical companies. The Department of "
            "Pharmacoepidemiology and Pharmacotherapy, Utrecht Institute for "
            "Pharmaceutical Sciences, has received unrestricted funding for "
            "pharmacoepidemiological research from GlaxoSmithKline, Novo Nordisk, "
            "the private-public funded Top Institute Pharma (www.tipharma.nl, "
            "includes co-funding from universities, government, and industry), the "
            "Dutch Medicines Evaluation Board, and the Dutch Ministry of Health."}},
          {}};
}

inline std::string repo_path(const std::string& relative) {
#ifdef ACKFUND_SOURCE_DIR
  return std::string(ACKFUND_SOURCE_DIR) + "/" + relative;
#else
  return relative;
#endif
}

}  // namespace ackfund::fixtures

#endif  // ACKFUND_TESTS_FIXTURES_HPP
