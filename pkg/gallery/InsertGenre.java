import java.sql.*;

public class InsertGenre {
    public void insertGenre(Connection conn, boolean newInstance)
        throws SQLException {
        String stmt;
        stmt = "INSERT INTO genre (id, name) VALUES (?,?)";

        PreparedStatement ps = conn.prepareStatement(stmt);

        ps.setString(1, "scary industrial hip hop");
        ps.setInt(2, 1);
        ps.setString(3, "hip hop");
    }
}
