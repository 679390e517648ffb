// Template table.  One row per cell; placeholders are the atoms P, S, Q, R.
// A third column keeps the text as originally printed when a fix was made.

#include "edgepat/catalog.hpp"

namespace edgepat::catalog_data {

const std::vector<Row>& rows() {
  static const std::vector<Row> table = {
      // Absence
      {"absence.globally.0", "[] !P", nullptr},
      {"absence.globally.1", "[] !P", nullptr},
      {"absence.globally.2", "[] !up(P)", nullptr},
      {"absence.globally.3", "[] !up(P)", nullptr},
      {"absence.before.0", "<>R -> (!P U R)", nullptr},
      {"absence.before.1", "<>up(R) -> (up(R) P P)", nullptr},
      {"absence.before.2", "<>R -> (!up(P) U R)", nullptr},
      {"absence.before.3", "<>up(R) -> (!up(P) U up(R))", nullptr},
      {"absence.after.0", "[](Q -> [] !P)", nullptr},
      {"absence.after.1", "[](up(Q) -> X [] !P)", nullptr},
      {"absence.after.2", "[](Q -> [] !up(P))", nullptr},
      {"absence.after.3", "[](up(Q) -> [] !up(P))", nullptr},
      {"absence.between.0", "[]((Q && <>R) -> (!P U R))", nullptr},
      {"absence.between.1", "[]((up(Q) && <>up(R) && !up(R)) -> X (up(R) P P))", nullptr},
      {"absence.between.2", "[]((Q && <>R) -> (!up(P) U R))", nullptr},
      {"absence.between.3", "[]((up(Q) && <>up(R)) -> (!up(P) U up(R)))", nullptr},
      {"absence.after_until.0", "[]((Q && <>P) -> (!P U R))", nullptr},
      {"absence.after_until.1", "[]((up(Q) && !up(R) && X <>P) -> X (up(R) P P))", nullptr},
      {"absence.after_until.2", "[](Q -> (!up(P) W R))", nullptr},
      {"absence.after_until.3", "[](up(Q) -> (!up(P) W up(R)))", nullptr},

      // Existence
      {"existence.globally.0", "<>P", nullptr},
      {"existence.globally.1", "<>P", nullptr},
      {"existence.globally.2", "<>up(P)", nullptr},
      {"existence.globally.3", "<>up(P)", nullptr},
      {"existence.before.0", "<>R -> (P P R)", nullptr},
      {"existence.before.1", "<>up(R) -> (!up(R) U P)", nullptr},
      {"existence.before.2", "<>R -> (up(P) P R)", nullptr},
      {"existence.before.3", "<>up(R) -> (up(P) P up(R))", nullptr},
      {"existence.after.0", "<>Q -> <>(Q && <>P)", nullptr},
      {"existence.after.1", "<>up(Q) -> <>(up(Q) && X <>P)", nullptr},
      {"existence.after.2", "<>Q -> <>(Q && <>up(P))", nullptr},
      {"existence.after.3", "<>up(Q) -> <>(up(Q) && <>up(P))", nullptr},
      {"existence.between.0", "[]((Q && <>R) -> ((P P R) && !R))", nullptr},
      {"existence.between.1", "[]((up(Q) && <>up(R)) -> (X (!up(R) U P) && !up(R)))", nullptr},
      {"existence.between.2", "[]((Q && <>R) -> ((up(P) P R) && !R))", nullptr},
      {"existence.between.3", "[]((up(Q) && <>up(R)) -> ((up(P) P up(R)) && !up(R)))", nullptr},
      {"existence.after_until.0", "[](Q -> (<>R ? (P P R) && !R : <>P))", nullptr},
      {"existence.after_until.1", "[](up(Q) -> X (!up(R) U P) && !up(R))", nullptr},
      {"existence.after_until.2", "[](Q -> (<>R ? (up(P) P R) && !R : <>up(P)))", nullptr},
      {"existence.after_until.3",
       "[](up(Q) -> (<>up(R) ? (up(P) P up(R)) && !up(R) : <>up(P)))", nullptr},

      // Universality: edges cannot hold universally, so only combinations 0 and 1.
      {"universality.globally.0", "[] P", nullptr},
      {"universality.globally.1", "[] P", nullptr},
      {"universality.before.0", "<>R -> (P U R)", nullptr},
      {"universality.before.1", "<>up(R) -> (up(R) P !P)", nullptr},
      {"universality.after.0", "[](Q -> [] P)", nullptr},
      {"universality.after.1", "[](up(Q) -> X [] P)", nullptr},
      {"universality.between.0", "[]((Q && <>R) -> (P U R))", nullptr},
      {"universality.between.1", "[]((up(Q) && <>up(R) && !up(R)) -> X (up(R) P !P))", nullptr},
      {"universality.after_until.0", "[](Q -> (P W R))", nullptr},
      {"universality.after_until.1", "[](up(Q) -> X (<>up(R) ? (up(R) P !P) : [] P))", nullptr},

      // Precedence
      {"precedence.globally.0", "<>P -> (S P P)", nullptr},
      {"precedence.globally.1", "<>P -> (S P P)", nullptr},
      {"precedence.globally.2", "<>up(P) -> (up(S) P up(P))", nullptr},
      {"precedence.globally.3", "<>up(P) -> (up(S) P up(P))", nullptr},
      {"precedence.before.0", "<>R -> (!P U ((S && !P) || R))", nullptr},
      {"precedence.before.1", "<>up(R) -> ((!up(R) U P) -> (S P P))", nullptr},
      {"precedence.before.2", "<>R -> (!up(P) U ((up(S) && !up(P)) || R))", nullptr},
      {"precedence.before.3", "<>up(R) -> ((up(P) P up(R)) -> (up(S) P up(P)))", nullptr},
      {"precedence.after.0", "<>Q -> <>(Q && (<>P -> (S P P)))", nullptr},
      {"precedence.after.1", "<>up(Q) -> <>(up(Q) && X (<>P -> (S P P)))", nullptr},
      {"precedence.after.2", "<>Q -> <>(Q && (<>up(P) -> (up(S) P up(P))))", nullptr},
      {"precedence.after.3", "<>up(Q) -> <>(up(Q) && (<>up(P) -> (up(S) P up(P))))", nullptr},
      {"precedence.between.0", "[]((Q && <>R) -> (!P U ((S && !P) || R)))", nullptr},
      {"precedence.between.1",
       "[]((up(Q) && !up(R) && X <>up(R)) -> X ((!up(R) U P) -> (S P P)))",
       "[]((up(Q) && !up(R) X <>up(R)) -> X ((!up(R) U P) -> (S P P)))"},
      {"precedence.between.2", "[]((Q && <>R) -> (!up(P) U ((up(S) && !up(P)) || R)))", nullptr},
      {"precedence.between.3",
       "[]((up(Q) && !up(R) && X <>up(R)) -> X ((up(P) P up(R)) -> (up(S) P up(P))))",
       "[]((up(Q) && !up(R) X <>up(R)) -> X ((up(P) P up(R)) -> (up(S) P up(P))))"},
      {"precedence.after_until.0", "[](Q -> (<>P -> !P U ((S && !P) || R)))", nullptr},
      {"precedence.after_until.1", "[](up(Q) -> X (<>P -> ((!up(R) U P) -> (S P P))))", nullptr},
      {"precedence.after_until.2", "[](Q -> (<>up(P) -> !up(P) U ((up(S) && !up(P)) || R)))",
       nullptr},
      {"precedence.after_until.3",
       "[](up(Q) -> X (<>up(P) -> ((up(P) P up(R)) -> (up(S) P up(P)))))", nullptr},

      // Response
      {"response.globally.0", "[](P -> <>S)", nullptr},
      {"response.globally.1", "[](P -> <>S)", nullptr},
      {"response.globally.2", "[](up(P) -> <>up(S))", nullptr},
      {"response.globally.3", "[](up(P) -> <>up(S))", nullptr},
      {"response.before.0", "<>R -> (P -> (!R U S)) U R", nullptr},
      {"response.before.1", "<>up(R) -> ((P -> (!up(R) U S)) && !up(R)) U (up(R) && (P -> S))",
       "<>up(R) -> ((P -> (!up(R) U S)) && !up(R)) U (up(R) && (P -> Q))"},
      {"response.before.2", "<>R -> (up(P) -> (!R U (up(S) && !R))) U R",
       "<>R -> (up(P) -> (!R U up(S))) U R"},
      {"response.before.3", "<>up(R) -> (up(P) -> (!up(R) U up(S))) U up(R)", nullptr},
      {"response.after.0", "[](Q -> [](P -> <>S))", nullptr},
      {"response.after.1", "[](up(Q) -> X [](P -> <>S))", nullptr},
      {"response.after.2", "[](Q -> [](up(P) -> <>up(S)))", nullptr},
      {"response.after.3", "[](up(Q) -> [](up(P) -> <>up(S)))", nullptr},
      {"response.between.0", "[]((Q && <>R) -> ((P -> (!R U S)) U R))", nullptr},
      {"response.between.1",
       "[]((up(Q) && <>up(R) && !up(R)) -> X (((P -> (!up(R) U S)) && !up(R)) U (up(R) && (P -> S))))",
       "[]((up(Q) && <>up(R) && !up(R)) -> X (((P -> (!up(R) U S)) && !up(R)) U (up(R) && (P -> Q))))"},
      {"response.between.2", "[]((Q && <>R) -> ((up(P) -> (!R U (up(S) && !R))) U R))",
       "[]((Q && <>R) -> ((up(P) -> (!R U up(S))) U R))"},
      {"response.between.3", "[]((up(Q) && <>up(R)) -> ((up(P) -> (!up(R) U up(S))) U up(R)))",
       nullptr},
      {"response.after_until.0", "[](Q -> (P -> (!R U S)) W R)", nullptr},
      {"response.after_until.1",
       "[](up(Q) -> X (((P -> (!up(R) U S)) && !up(R)) W (up(R) && (P -> S))))",
       "[](up(Q) -> X (((P -> (!up(R) U S)) && !up(R)) W (up(R) && (P -> Q))))"},
      {"response.after_until.2", "[](Q -> (up(P) -> (!R U (up(S) && !R))) W R)",
       "[](up(Q) -> (up(P) -> (!R U up(S))) W R)"},
      {"response.after_until.3", "[](up(Q) -> (up(P) -> (!up(R) U up(S))) W up(R))", nullptr},
  };
  return table;
}

}  // namespace edgepat::catalog_data
