/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef GDM_GUARD_GDM_CLI_HH
#define GDM_GUARD_GDM_CLI_HH 1

#include <iosfwd>

namespace gdm
{
    /**
     * The `gdm` command line: group, search, verify, kotzig, construct,
     * survey. Exit 0 when a verdict is reached, 1 on usage or format errors,
     * 2 when a budget runs out.
     */
    [[nodiscard]] auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int;
}

#endif
