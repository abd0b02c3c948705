import java.math.BigDecimal;
import java.sql.*;

public class InterleavedStatements {
    public void run(Connection conn) throws SQLException {
        PreparedStatement find = conn.prepareStatement("SELECT id FROM employee WHERE name = ?");
        PreparedStatement raise = conn.prepareStatement("UPDATE employee SET salary = ? WHERE id = ?");
        find.setString(1, "ann");
        ResultSet rs = find.executeQuery();
        while (rs.next()) {
            raise.setInt(1, 60000);
            raise.setInt(2, rs.getInt(1));
            raise.executeUpdate();
        }
    }
}
