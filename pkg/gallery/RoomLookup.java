import java.math.BigDecimal;
import java.sql.*;

public class RoomLookup {
    public Room getById(Connection connection, int id) throws SQLException {
        var statement = connection.prepareStatement(
            "SELECT * FROM ROOMS WHERE ID = ?");
        statement.setBigDecimal(1, BigDecimal.valueOf(id));
        ResultSet resultSet = statement.executeQuery();
        if (resultSet.next()) {
            return createRoom(resultSet);
        }
        return null;
    }

    private Room createRoom(
        @Sql(out = {"DECIMAL ID", "VARCHAR ROOM_TYPE", "INTEGER PRICE", "VARCHAR BOOKED"})
        ResultSet resultSet
    ) throws SQLException {
        return new Room(
            resultSet.getInt("ID"),
            resultSet.getString("ROOM_TYPE"),
            resultSet.getInt("PRICE"),
            resultSet.getBoolean("BOOKED"));
    }
}
