import java.sql.*;

public class SetterProblems {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement(
            "SELECT label FROM warehouse WHERE qty > ?");
        ps.setString(1, "5");
        ps.setString(2, "abc");
    }
}
